//! Command-line front end: parse posets and complexes, run the checkers,
//! emit certificates and verification reports.
//!
//! Exit codes: 0 success, 1 a queried property is false (or a verification
//! failure was found), 2 invalid input.

mod format;
mod report;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{ArgGroup, Parser, Subcommand};
use serde_json::{json, Value};

use nonevasive::bw::{self, BwFailure, Variant};
use nonevasive::complex::SimplicialComplex;
use nonevasive::dismantle::{self, DismantleSolver, DismantlingSequence};
use nonevasive::evasive::{self, NonEvasiveSolver};
use nonevasive::generate::{self, Family};
use nonevasive::poset::{CoverWarning, FinitePoset};
use nonevasive::set::ElemSet;
use nonevasive::Certificate;

#[derive(Parser)]
#[command(
    name = "nonevasive",
    version,
    about = "Poset and order-complex toolkit: dismantlability, non-evasiveness, \
             and exhaustive verification of the BW-type hypotheses"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Inspect a poset file: order properties, irreducibles,
    /// dismantlability, hypothesis variants per element, and
    /// non-evasiveness of the order complex
    Check {
        path: PathBuf,
        /// Emit a JSON report instead of text
        #[arg(long)]
        json: bool,
        /// Fail (exit 1) unless the property holds: nonevasive,
        /// not-nonevasive, dismantlable, not-dismantlable
        #[arg(long, value_name = "PROP")]
        expect: Option<String>,
        /// Write the report here instead of stdout
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Emit posets in the text format, `---`-separated
    #[command(group(ArgGroup::new("what").required(true).args(["all_n", "family", "random"])))]
    Generate {
        /// Every isomorphism class on N elements
        #[arg(long, value_name = "N")]
        all_n: Option<usize>,
        /// A named family: chain, antichain, diamond, boolean, crown
        #[arg(long, value_name = "NAME")]
        family: Option<String>,
        /// Size parameter for --family
        #[arg(long, default_value_t = 3, value_name = "K")]
        size: usize,
        /// Seeded random posets on N elements
        #[arg(long, value_name = "N")]
        random: Option<usize>,
        /// How many random posets
        #[arg(long, default_value_t = 1, value_name = "C")]
        count: usize,
        /// Relation density for --random, within [0, 1]
        #[arg(long, default_value_t = 0.5, value_name = "B")]
        edge_bias: f64,
        #[arg(long, default_value_t = 42, value_name = "S")]
        seed: u64,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Decide non-evasiveness of a complex file (exit 1 when evasive)
    Nonevasive {
        path: PathBuf,
        #[arg(long)]
        json: bool,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Decide dismantlability of a poset file (exit 1 when not)
    Dismantle {
        path: PathBuf,
        #[arg(long)]
        json: bool,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Exhaustively verify that hypothesis-satisfying posets have
    /// non-evasive order complexes, over all isomorphism classes up to
    /// --max-n
    VerifyConjecture {
        /// Largest poset size (guarded at 6; --force allows 7)
        #[arg(long, default_value_t = 5, value_name = "N")]
        max_n: usize,
        /// Hypothesis variant: corollary15, theorem8 or bw
        #[arg(long, default_value = "corollary15", value_name = "V")]
        variant: String,
        #[arg(long, default_value_t = 42, value_name = "S")]
        seed: u64,
        /// Also check this many seeded random posets at size --max-n
        #[arg(long, default_value_t = 0, value_name = "COUNT")]
        random: usize,
        #[arg(long)]
        json: bool,
        /// Write the JSON summary (including any falsification reports) here
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
        /// Check only the first removal candidate instead of all of them
        #[arg(long)]
        first_r_only: bool,
        /// Allow --max-n 7
        #[arg(long)]
        force: bool,
    },
    /// Emit a certificate for a target property, or replay one with
    /// --verify (exit 1 when the property fails or the certificate is bad)
    Certificate {
        /// Complex file for --target nonevasive, poset file for
        /// --target dismantle
        path: PathBuf,
        /// nonevasive or dismantle
        #[arg(long, value_name = "TARGET")]
        target: String,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
        /// Replay this certificate file instead of emitting one
        #[arg(long, value_name = "PATH")]
        verify: Option<PathBuf>,
    },
    /// Emit the dual of a poset file
    Dual {
        path: PathBuf,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Check {
            path,
            json,
            expect,
            out,
        } => cmd_check(&path, json, expect, out),
        Command::Generate {
            all_n,
            family,
            size,
            random,
            count,
            edge_bias,
            seed,
            out,
        } => cmd_generate(all_n, family, size, random, count, edge_bias, seed, out),
        Command::Nonevasive { path, json, out } => cmd_nonevasive(&path, json, out),
        Command::Dismantle { path, json, out } => cmd_dismantle(&path, json, out),
        Command::VerifyConjecture {
            max_n,
            variant,
            seed,
            random,
            json,
            out,
            first_r_only,
            force,
        } => cmd_verify_conjecture(
            max_n,
            &variant,
            seed,
            random,
            json,
            out,
            first_r_only,
            force,
        ),
        Command::Certificate {
            path,
            target,
            out,
            verify,
        } => cmd_certificate(&path, &target, out, verify),
        Command::Dual { path, out } => cmd_dual(&path, out),
    }
}

/// The non-evasiveness vertex guard, overridable via the
/// NONEVASIVE_MAX_VERTICES environment variable.
fn solver() -> NonEvasiveSolver {
    match std::env::var("NONEVASIVE_MAX_VERTICES")
        .ok()
        .and_then(|v| v.parse().ok())
    {
        Some(limit) => NonEvasiveSolver::with_limit(limit),
        None => NonEvasiveSolver::new(),
    }
}

fn read_input(path: &PathBuf) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn write_output(out: Option<PathBuf>, content: &str) -> Result<()> {
    match out {
        Some(path) => {
            fs::write(&path, content).with_context(|| format!("writing {}", path.display()))
        }
        None => {
            println!("{}", content.trim_end());
            Ok(())
        }
    }
}

fn report_warnings(warnings: &[CoverWarning]) {
    for w in warnings {
        match w {
            CoverWarning::RedundantPair { lower, upper } => {
                eprintln!("warning: pair {lower} < {upper} is implied and not a cover; normalized")
            }
            CoverWarning::DuplicatePair { lower, upper } => {
                eprintln!("warning: pair {lower} < {upper} listed more than once")
            }
        }
    }
}

/// Load every poset from a `---`-separated file.
fn load_poset_stream(path: &PathBuf) -> Result<Vec<FinitePoset>> {
    let text = read_input(path)?;
    let parsed =
        format::parse_poset_stream(&text).map_err(|e| anyhow!("{}: {e}", path.display()))?;
    Ok(parsed
        .into_iter()
        .map(|p| {
            report_warnings(&p.warnings);
            p.poset
        })
        .collect())
}

/// Load a file that must contain exactly one poset.
fn load_poset(path: &PathBuf) -> Result<FinitePoset> {
    let mut all = load_poset_stream(path)?;
    if all.len() != 1 {
        bail!(
            "{}: file contains {} posets; expected one",
            path.display(),
            all.len()
        );
    }
    Ok(all.pop().unwrap())
}

fn set_to_string(s: ElemSet) -> String {
    let items: Vec<String> = s.iter().map(|e| e.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

fn yesno(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

struct CheckOutcome {
    doc: Value,
    text: String,
    nonevasive: bool,
    dismantlable: bool,
}

fn cmd_check(
    path: &PathBuf,
    json: bool,
    expect: Option<String>,
    out: Option<PathBuf>,
) -> Result<ExitCode> {
    let posets = load_poset_stream(path)?;
    let mut nsolver = solver();
    let mut dsolver = DismantleSolver::new();
    let outcomes: Vec<CheckOutcome> = posets
        .iter()
        .map(|p| check_one(p, &mut nsolver, &mut dsolver))
        .collect::<Result<_>>()?;

    if json {
        if outcomes.len() == 1 {
            write_output(out, &serde_json::to_string_pretty(&outcomes[0].doc)?)?;
        } else {
            let docs: Vec<&Value> = outcomes.iter().map(|o| &o.doc).collect();
            write_output(out, &serde_json::to_string_pretty(&docs)?)?;
        }
    } else {
        let blocks: Vec<&str> = outcomes.iter().map(|o| o.text.as_str()).collect();
        write_output(out, &blocks.join("---\n"))?;
    }

    if let Some(prop) = expect {
        let all_hold = outcomes.iter().all(|o| match prop.as_str() {
            "nonevasive" => o.nonevasive,
            "not-nonevasive" => !o.nonevasive,
            "dismantlable" => o.dismantlable,
            "not-dismantlable" => !o.dismantlable,
            _ => false,
        });
        if !matches!(
            prop.as_str(),
            "nonevasive" | "not-nonevasive" | "dismantlable" | "not-dismantlable"
        ) {
            bail!("unknown property '{prop}' for --expect");
        }
        if !all_hold {
            eprintln!("expectation failed: {prop}");
            return Ok(ExitCode::from(1));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn check_one(
    poset: &FinitePoset,
    nsolver: &mut NonEvasiveSolver,
    dsolver: &mut DismantleSolver,
) -> Result<CheckOutcome> {
    if poset.is_empty() {
        bail!("poset is empty");
    }
    let sequence = dsolver.dismantling_sequence(poset)?;
    let delta = SimplicialComplex::order_complex(poset);
    let certificate = nsolver.is_non_evasive(&delta)?;
    let nonevasive = certificate.is_some();
    let dismantlable = sequence.is_some();
    let irreducibles: Vec<usize> = poset
        .elements()
        .filter(|&x| poset.is_irreducible(x))
        .collect();
    let reports: Vec<bw::BwReport> = poset.elements().map(|s| bw::bw_report(poset, s)).collect();

    let per_s: Vec<Value> = reports
        .iter()
        .map(|rep| {
            // structural replay is cheap at enumeration scale only
            let recursion = if poset.len() <= generate::ENUMERATION_LIMIT {
                structural_recursion(poset, rep, nsolver)
            } else {
                json!([])
            };
            report::instance_report(poset, rep, nonevasive, certificate.as_ref(), recursion)
        })
        .collect();
    let doc = json!({
        "n": poset.len(),
        "covers": poset.cover_pairs(),
        "minimal": report::set_to_json(poset.minimal_elements()),
        "maximal": report::set_to_json(poset.maximal_elements()),
        "irreducibles": irreducibles,
        "dismantlable": dismantlable,
        "dismantling_sequence": sequence.as_ref().map(|s| serde_json::to_value(s).unwrap()),
        "nonevasive": nonevasive,
        "certificate": certificate.as_ref().map(|c| serde_json::to_value(c).unwrap()),
        "order_complex_faces": delta.face_count(),
        "reports": per_s,
    });

    let mut text = String::new();
    text.push_str(&format!(
        "n={}, cover pairs: {}\n",
        poset.len(),
        poset.cover_pairs().len()
    ));
    text.push_str(&format!(
        "minimal: {}  maximal: {}\n",
        set_to_string(poset.minimal_elements()),
        set_to_string(poset.maximal_elements())
    ));
    let irr: Vec<String> = irreducibles.iter().map(|x| x.to_string()).collect();
    text.push_str(&format!("irreducible elements: {{{}}}\n", irr.join(",")));
    match &sequence {
        Some(seq) => {
            let order: Vec<String> = seq.order.iter().map(|x| x.to_string()).collect();
            text.push_str(&format!("dismantlable: yes (order: {})\n", order.join(" ")));
        }
        None => text.push_str("dismantlable: no\n"),
    }
    text.push_str(&format!(
        "order complex: {} faces on {} vertices; non-evasive: {}\n",
        delta.face_count(),
        delta.vertex_count(),
        yesno(nonevasive)
    ));
    text.push_str("hypotheses per s:\n");
    for rep in &reports {
        text.push_str(&format!(
            "  s={}: corollary15={} theorem8={} bw={} off-core={}\n",
            rep.s,
            yesno(rep.corollary15),
            yesno(rep.theorem8),
            yesno(rep.bw),
            set_to_string(rep.off_core)
        ));
    }
    Ok(CheckOutcome {
        doc,
        text,
        nonevasive,
        dismantlable,
    })
}

/// Structural replay for the JSON report: the removal induction runs on
/// the poset itself when the join-oriented hypotheses hold, else on the
/// dual when the meet-oriented ones do.
fn structural_recursion(
    poset: &FinitePoset,
    rep: &bw::BwReport,
    nsolver: &mut NonEvasiveSolver,
) -> Value {
    let run = |p: &FinitePoset, nsolver: &mut NonEvasiveSolver| -> Value {
        match bw::verify_induction(p, rep.s, true, nsolver) {
            Ok(tree) => json!([serde_json::to_value(&tree).unwrap()]),
            Err(BwFailure::Falsified(f)) => json!([{ "claim": f.claim, "details": f.details }]),
            Err(BwFailure::Precondition(_)) => json!([]),
        }
    };
    if rep.bw {
        run(poset, nsolver)
    } else if rep.corollary15 {
        run(&poset.dual(), nsolver)
    } else {
        json!([])
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_generate(
    all_n: Option<usize>,
    family: Option<String>,
    size: usize,
    random: Option<usize>,
    count: usize,
    edge_bias: f64,
    seed: u64,
    out: Option<PathBuf>,
) -> Result<ExitCode> {
    let posets: Vec<FinitePoset> = if let Some(n) = all_n {
        generate::all_posets(n)?
    } else if let Some(name) = family {
        vec![generate::named(Family::parse(&name)?, size)?]
    } else if let Some(n) = random {
        (0..count)
            .map(|i| generate::random_poset(n, edge_bias, seed.wrapping_add(i as u64)))
            .collect::<Result<_, _>>()?
    } else {
        unreachable!("clap enforces the group");
    };
    let blocks: Vec<String> = posets.iter().map(format::poset_to_text).collect();
    write_output(out, &blocks.join("---\n"))?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_nonevasive(path: &PathBuf, json: bool, out: Option<PathBuf>) -> Result<ExitCode> {
    let text = read_input(path)?;
    let parsed = format::parse_complex(&text).map_err(|e| anyhow!("{}: {e}", path.display()))?;
    if !parsed.was_down_closed {
        eprintln!("note: input was not down-closed; missing subfaces were added");
    }
    let cx = parsed.complex;
    let mut nsolver = solver();
    let certificate = nsolver.is_non_evasive(&cx)?;
    let nonevasive = certificate.is_some();
    if json {
        let doc = json!({
            "vertices": cx.vertices(),
            "faces": cx.face_count(),
            "was_down_closed": parsed.was_down_closed,
            "nonevasive": nonevasive,
            "certificate": certificate.as_ref().map(|c| serde_json::to_value(c).unwrap()),
        });
        write_output(out, &serde_json::to_string_pretty(&doc)?)?;
    } else {
        let verdict = format!(
            "{} faces on {} vertices; non-evasive: {}",
            cx.face_count(),
            cx.vertex_count(),
            yesno(nonevasive)
        );
        write_output(out, &verdict)?;
    }
    Ok(if nonevasive {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_dismantle(path: &PathBuf, json: bool, out: Option<PathBuf>) -> Result<ExitCode> {
    let poset = load_poset(path)?;
    let sequence = dismantle::dismantling_sequence(&poset)?;
    if json {
        let doc = json!({
            "n": poset.len(),
            "dismantlable": sequence.is_some(),
            "sequence": sequence.as_ref().map(|s| serde_json::to_value(s).unwrap()),
        });
        write_output(out, &serde_json::to_string_pretty(&doc)?)?;
    } else {
        match &sequence {
            Some(seq) => {
                let order: Vec<String> = seq.order.iter().map(|x| x.to_string()).collect();
                write_output(
                    out,
                    &format!("dismantlable: yes (order: {})", order.join(" ")),
                )?;
            }
            None => write_output(out, "dismantlable: no")?,
        }
    }
    Ok(if sequence.is_some() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify_conjecture(
    max_n: usize,
    variant_name: &str,
    seed: u64,
    random: usize,
    json: bool,
    out: Option<PathBuf>,
    first_r_only: bool,
    force: bool,
) -> Result<ExitCode> {
    let variant = Variant::parse(variant_name)?;
    let limit = if force {
        generate::ENUMERATION_LIMIT
    } else {
        6
    };
    if max_n == 0 || max_n > limit {
        bail!("--max-n must be within 1..={limit} (use --force for 7)");
    }
    let started = Instant::now();
    let mut nsolver = solver();
    let mut dsolver = DismantleSolver::new();
    let mut classes_per_n: Vec<usize> = Vec::new();
    let mut instances = 0usize;
    let mut holding = 0usize;
    let mut verified = 0usize;
    let mut failures: Vec<Value> = Vec::new();

    for n in 1..=max_n {
        let classes = generate::all_posets(n)?;
        classes_per_n.push(classes.len());
        for p in &classes {
            run_instance(
                p,
                variant,
                !first_r_only,
                &mut nsolver,
                &mut dsolver,
                &mut instances,
                &mut holding,
                &mut verified,
                &mut failures,
            )?;
        }
    }
    for i in 0..random {
        // deterministic bias sweep over the seeded phase
        let bias = (i % 11) as f64 / 10.0;
        let p = generate::random_poset(max_n, bias, seed.wrapping_add(i as u64))?;
        run_instance(
            &p,
            variant,
            !first_r_only,
            &mut nsolver,
            &mut dsolver,
            &mut instances,
            &mut holding,
            &mut verified,
            &mut failures,
        )?;
    }

    let failure_count = failures.len();
    let summary = json!({
        "command": "verify-conjecture",
        "variant": variant.as_str(),
        "max_n": max_n,
        "seed": seed,
        "random_posets": random,
        "classes_per_n": classes_per_n,
        "instances": instances,
        "hypothesis_holding": holding,
        "verified": verified,
        "failure_count": failure_count,
        "failures": failures,
    });
    let rendered = serde_json::to_string_pretty(&summary)?;
    if let Some(path) = &out {
        fs::write(path, &rendered).with_context(|| format!("writing {}", path.display()))?;
    }
    if json {
        println!("{rendered}");
    } else {
        println!(
            "variant {}: {} instances over {} classes, {} satisfied the hypotheses, {} verified, {} failures",
            variant.as_str(),
            instances,
            classes_per_n.iter().sum::<usize>(),
            holding,
            verified,
            failure_count,
        );
        println!("runtime: {:.2?}", started.elapsed());
    }
    Ok(if failure_count == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

/// Check one poset: every choice of `s`, structural verification plus the
/// independent non-evasiveness decision.
#[allow(clippy::too_many_arguments)]
fn run_instance(
    p: &FinitePoset,
    variant: Variant,
    all_r: bool,
    nsolver: &mut NonEvasiveSolver,
    dsolver: &mut DismantleSolver,
    instances: &mut usize,
    holding: &mut usize,
    verified: &mut usize,
    failures: &mut Vec<Value>,
) -> Result<()> {
    for s in p.elements() {
        *instances += 1;
        if !bw::variant_witnesses(variant, p, s).is_empty() {
            continue;
        }
        *holding += 1;
        let delta = SimplicialComplex::order_complex(p);
        let certificate = nsolver.is_non_evasive(&delta)?;
        let mut bad: Option<(String, String)> = None;
        match &certificate {
            None => {
                bad = Some((
                    "hypothesis-satisfying posets have non-evasive order complexes".into(),
                    format!("no certificate for n = {}, s = {s}", p.len()),
                ));
            }
            Some(cert) if !evasive::verify_certificate(&delta, cert) => {
                bad = Some((
                    "emitted certificates replay successfully".into(),
                    format!("bad certificate for n = {}, s = {s}", p.len()),
                ));
            }
            Some(_) => {
                let structural = match variant {
                    Variant::Bw => structural_bw(p, s, all_r, nsolver),
                    Variant::Corollary15 => structural_bw(&p.dual(), s, all_r, nsolver),
                    Variant::Theorem8 => structural_theorem8(p, s, nsolver, dsolver),
                };
                if let Err(e) = structural {
                    bad = Some(e);
                }
            }
        }
        match bad {
            None => *verified += 1,
            Some((claim, details)) => failures.push(report::falsification_report(
                p,
                s,
                variant.as_str(),
                true,
                &claim,
                &details,
                certificate.is_some(),
                certificate.as_ref(),
            )),
        }
    }
    Ok(())
}

fn structural_bw(
    p: &FinitePoset,
    s: usize,
    all_r: bool,
    nsolver: &mut NonEvasiveSolver,
) -> std::result::Result<(), (String, String)> {
    match bw::verify_induction(p, s, all_r, nsolver) {
        Ok(_) => Ok(()),
        Err(BwFailure::Falsified(f)) => Err((f.claim, f.details)),
        Err(BwFailure::Precondition(e)) => Err(("structural preconditions".into(), e.to_string())),
    }
}

/// The meet-oriented structural route: the W/U partition test plus the
/// corridor machinery for every nonempty chain in W.
fn structural_theorem8(
    p: &FinitePoset,
    s: usize,
    nsolver: &mut NonEvasiveSolver,
    dsolver: &mut DismantleSolver,
) -> std::result::Result<(), (String, String)> {
    let fail = |claim: &str, details: String| Err((claim.to_string(), details));
    let (w_set, u_set) = bw::w_partition(p, s);
    let delta = SimplicialComplex::order_complex(p);
    let w_labels: Vec<u32> = w_set.iter().map(|e| e as u32).collect();
    match evasive::baclawski_partition_test(nsolver, &delta, &w_labels) {
        Ok(true) => {}
        Ok(false) => {
            return fail(
                "the W/U partition certifies non-evasiveness",
                format!("s = {s}"),
            )
        }
        Err(e) => return fail("partition test runs", e.to_string()),
    }
    // U itself must carry the id ≥ f ≤ ⟨s⟩ chain and be dismantlable
    let f = match bw::meet_projection(p, s) {
        Ok(f) => f,
        Err(e) => return fail("the meet projection exists on U", e.to_string()),
    };
    for z_sub in f.poset.elements() {
        let z = f.remap.to_parent(z_sub);
        let fz = f.remap.to_parent(f.map.apply(z_sub));
        if !p.leq(fz, z) || !p.leq(fz, s) {
            return fail("id_U ≥ f ≤ ⟨s⟩ pointwise", format!("s = {s}, z = {z}"));
        }
    }
    match dsolver.is_dismantlable(&f.poset) {
        Ok(true) => {}
        Ok(false) => return fail("U is dismantlable", format!("s = {s}, U = {u_set:?}")),
        Err(e) => return fail("dismantlability check runs", e.to_string()),
    }
    // every nonempty chain σ ⊆ W spans a dismantlable corridor
    for bits in 1u64..1 << p.len() {
        let sigma = ElemSet::from_bits(bits);
        if !sigma.is_subset_of(w_set) || !p.is_chain(sigma) {
            continue;
        }
        let t_set = match bw::corridor(p, s, sigma) {
            Ok(t) => t,
            Err(e) => return fail("corridors are defined for chains in W", e.to_string()),
        };
        if t_set.is_empty() {
            return fail(
                "corridors are nonempty",
                format!("s = {s}, sigma = {sigma:?}"),
            );
        }
        let sigma_labels: Vec<u32> = sigma.iter().map(|e| e as u32).collect();
        let u_labels: Vec<u32> = u_set.iter().map(|e| e as u32).collect();
        let t_labels: Vec<u32> = t_set.iter().map(|e| e as u32).collect();
        let star_u = match delta.star(&sigma_labels) {
            Ok(st) => st.restrict(&u_labels),
            Err(e) => return fail("stars of chains exist", e.to_string()),
        };
        if star_u != delta.restrict(&t_labels) {
            return fail(
                "the corridor's order complex is star(σ)|U",
                format!("s = {s}, sigma = {sigma:?}"),
            );
        }
        let g = match bw::corridor_retraction(p, s, sigma) {
            Ok(g) => g,
            Err(e) => return fail("the corridor retraction exists", e.to_string()),
        };
        let ws = p.sort_chain(sigma);
        let peak = match p.join(ws[ws.len() - 1], s) {
            Some(x) => x,
            None => return fail("w_k∨s exists", format!("s = {s}, sigma = {sigma:?}")),
        };
        for t_sub in g.poset.elements() {
            let t = g.remap.to_parent(t_sub);
            let gt = g.remap.to_parent(g.map.apply(t_sub));
            if !p.leq(gt, t) || !p.leq(gt, peak) {
                return fail(
                    "id_T ≥ g ≤ ⟨w_k∨s⟩ pointwise",
                    format!("s = {s}, sigma = {sigma:?}, t = {t}"),
                );
            }
        }
        match dsolver.is_dismantlable(&g.poset) {
            Ok(true) => {}
            Ok(false) => {
                return fail(
                    "corridors are dismantlable",
                    format!("s = {s}, sigma = {sigma:?}"),
                )
            }
            Err(e) => return fail("dismantlability check runs", e.to_string()),
        }
    }
    Ok(())
}

fn cmd_certificate(
    path: &PathBuf,
    target: &str,
    out: Option<PathBuf>,
    verify: Option<PathBuf>,
) -> Result<ExitCode> {
    match target {
        "nonevasive" => {
            let text = read_input(path)?;
            let parsed =
                format::parse_complex(&text).map_err(|e| anyhow!("{}: {e}", path.display()))?;
            let cx = parsed.complex;
            if let Some(cert_path) = verify {
                let cert_text = read_input(&cert_path)?;
                let cert: Certificate = serde_json::from_str(&cert_text)
                    .with_context(|| format!("parsing certificate {}", cert_path.display()))?;
                if evasive::verify_certificate(&cx, &cert) {
                    println!("certificate: valid");
                    Ok(ExitCode::SUCCESS)
                } else {
                    println!("certificate: invalid");
                    Ok(ExitCode::from(1))
                }
            } else {
                let mut nsolver = solver();
                match nsolver.is_non_evasive(&cx)? {
                    Some(cert) => {
                        write_output(out, &serde_json::to_string_pretty(&cert)?)?;
                        Ok(ExitCode::SUCCESS)
                    }
                    None => {
                        eprintln!("not non-evasive");
                        Ok(ExitCode::from(1))
                    }
                }
            }
        }
        "dismantle" => {
            let poset = load_poset(path)?;
            if let Some(cert_path) = verify {
                let cert_text = read_input(&cert_path)?;
                let seq: DismantlingSequence = serde_json::from_str(&cert_text)
                    .with_context(|| format!("parsing certificate {}", cert_path.display()))?;
                if dismantle::verify_dismantling_sequence(&poset, &seq)? {
                    println!("certificate: valid");
                    Ok(ExitCode::SUCCESS)
                } else {
                    println!("certificate: invalid");
                    Ok(ExitCode::from(1))
                }
            } else {
                match dismantle::dismantling_sequence(&poset)? {
                    Some(seq) => {
                        write_output(out, &serde_json::to_string_pretty(&seq)?)?;
                        Ok(ExitCode::SUCCESS)
                    }
                    None => {
                        eprintln!("not dismantlable");
                        Ok(ExitCode::from(1))
                    }
                }
            }
        }
        other => bail!("unknown certificate target '{other}' (nonevasive or dismantle)"),
    }
}

fn cmd_dual(path: &PathBuf, out: Option<PathBuf>) -> Result<ExitCode> {
    let poset = load_poset(path)?;
    write_output(out, &format::poset_to_text(&poset.dual()))?;
    Ok(ExitCode::SUCCESS)
}
