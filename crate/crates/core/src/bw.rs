//! The BW-type hypotheses on a pointed poset `(P, s)` and the constructive
//! machinery showing that they force the order complex to be non-evasive.
//!
//! Three literal variants are implemented (they share condition (1), that
//! every element has a meet or a join with `s`):
//!
//! * `corollary15`: for `x < y`, if `s∧x` is missing but `s∧y` exists, then
//!   `(s∧y)∨x` exists.
//! * `theorem8`: for `w < z`, if `s∧w` is missing but `s∧z` exists, then
//!   `z∧(w∨s)` exists.
//! * `bw`: for `a > b`, if `a∨s` is missing but `b∨s` exists, then
//!   `a∧(b∨s)` exists.
//!
//! `corollary15` evaluated on the dual poset is literally the `bw`
//! statement; the variants are kept separate and related only through
//! `dual`, never aliased. The checkers return failure witnesses rather than
//! bare booleans so harness output stays actionable, and the structural
//! verifier replays the whole removal induction, flagging any step that
//! would falsify the underlying claims.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::complex::SimplicialComplex;
use crate::error::Error;
use crate::evasive::NonEvasiveSolver;
use crate::maps::PosetMap;
use crate::poset::{FinitePoset, IdRemap};
use crate::set::ElemSet;

/// The three hypothesis variants, named by their CLI tokens.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    Corollary15,
    Theorem8,
    Bw,
}

impl Variant {
    pub fn parse(name: &str) -> Result<Self, Error> {
        match name {
            "corollary15" => Ok(Variant::Corollary15),
            "theorem8" => Ok(Variant::Theorem8),
            "bw" => Ok(Variant::Bw),
            _ => Err(Error::BadParameter(
                "variant must be corollary15, theorem8 or bw",
            )),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Variant::Corollary15 => "corollary15",
            Variant::Theorem8 => "theorem8",
            Variant::Bw => "bw",
        }
    }
}

/// A concrete violation of one of the hypothesis conditions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Witness {
    /// Condition (1): `x` has neither a meet nor a join with `s`.
    NoBound { x: usize },
    /// Condition (2): the conditional meet/join extension is missing for
    /// this comparable pair (`lower < upper`).
    MissingExtension { lower: usize, upper: usize },
}

/// Condition (1) violations: elements with neither a meet nor a join with
/// `s`. Self-dual, so shared verbatim by all three variants.
fn no_bound_witnesses(poset: &FinitePoset, s: usize) -> Vec<Witness> {
    poset
        .elements()
        .filter(|&x| poset.meet(s, x).is_none() && poset.join(s, x).is_none())
        .map(|x| Witness::NoBound { x })
        .collect()
}

/// Witnesses against the `corollary15` hypotheses; empty means they hold.
///
/// The conditions are layered: condition (2) pairs are reported only when
/// condition (1) holds (a condition (1) violation already falsifies the
/// conjunction, and the pair conditions lean on (1) for their inner
/// meets/joins to denote).
pub fn corollary15_witnesses(poset: &FinitePoset, s: usize) -> Vec<Witness> {
    let out = no_bound_witnesses(poset, s);
    if !out.is_empty() {
        return out;
    }
    let mut out = Vec::new();
    for x in poset.elements() {
        if poset.meet(s, x).is_some() {
            continue;
        }
        for y in poset.elements() {
            if !poset.lt(x, y) {
                continue;
            }
            if let Some(m) = poset.meet(s, y) {
                if poset.join(m, x).is_none() {
                    out.push(Witness::MissingExtension { lower: x, upper: y });
                }
            }
        }
    }
    out
}

/// Witnesses against the `theorem8` hypotheses, layered like
/// [`corollary15_witnesses`]. With condition (1) in force the inner join
/// `w∨s` always exists.
pub fn theorem8_witnesses(poset: &FinitePoset, s: usize) -> Vec<Witness> {
    let out = no_bound_witnesses(poset, s);
    if !out.is_empty() {
        return out;
    }
    let mut out = Vec::new();
    for w in poset.elements() {
        if poset.meet(s, w).is_some() {
            continue;
        }
        let j = poset
            .join(w, s)
            .expect("condition (1) holds, so s∧w missing forces s∨w");
        for z in poset.elements() {
            if !poset.lt(w, z) || poset.meet(s, z).is_none() {
                continue;
            }
            if poset.meet(z, j).is_none() {
                out.push(Witness::MissingExtension { lower: w, upper: z });
            }
        }
    }
    out
}

/// Witnesses against the `bw` hypotheses, layered like
/// [`corollary15_witnesses`]. Pairs are reported as `(lower, upper)` with
/// `lower < upper` even though the statement ranges over `a > b`.
pub fn bw_witnesses(poset: &FinitePoset, s: usize) -> Vec<Witness> {
    let out = no_bound_witnesses(poset, s);
    if !out.is_empty() {
        return out;
    }
    let mut out = Vec::new();
    for a in poset.elements() {
        if poset.join(a, s).is_some() {
            continue;
        }
        for b in poset.elements() {
            if !poset.lt(b, a) {
                continue;
            }
            if let Some(j) = poset.join(b, s) {
                if poset.meet(a, j).is_none() {
                    out.push(Witness::MissingExtension { lower: b, upper: a });
                }
            }
        }
    }
    out.sort();
    out
}

pub fn variant_witnesses(variant: Variant, poset: &FinitePoset, s: usize) -> Vec<Witness> {
    match variant {
        Variant::Corollary15 => corollary15_witnesses(poset, s),
        Variant::Theorem8 => theorem8_witnesses(poset, s),
        Variant::Bw => bw_witnesses(poset, s),
    }
}

pub fn check_corollary15(poset: &FinitePoset, s: usize) -> bool {
    corollary15_witnesses(poset, s).is_empty()
}

pub fn check_theorem8(poset: &FinitePoset, s: usize) -> bool {
    theorem8_witnesses(poset, s).is_empty()
}

pub fn check_bw(poset: &FinitePoset, s: usize) -> bool {
    bw_witnesses(poset, s).is_empty()
}

/// `P ∖ (↑s ∪ ↓s)`: the elements incomparable to `s`.
pub fn off_core(poset: &FinitePoset, s: usize) -> ElemSet {
    poset.full_set() - (poset.up_set(s) | poset.down_set(s))
}

/// Minimal elements of the off-core subposet: the removal candidates.
pub fn off_core_minimal(poset: &FinitePoset, s: usize) -> ElemSet {
    let oc = off_core(poset, s);
    oc.iter()
        .filter(|&x| (poset.down_set(x) & oc) == ElemSet::singleton(x))
        .collect()
}

/// `bw` holds and `r` is a minimal element of the off-core.
pub fn check_bw_r(poset: &FinitePoset, s: usize, r: usize) -> bool {
    check_bw(poset, s) && off_core_minimal(poset, s).contains(r)
}

/// `bw` holds at `(s, r)` and `r` does not have a unique lower cover.
pub fn check_bwi(poset: &FinitePoset, s: usize, r: usize) -> bool {
    check_bw_r(poset, s, r) && poset.lower_covers(r).len() != 1
}

/// Which hypothesis variants hold at `(P, s)`, with the derived sets and
/// all failure witnesses.
#[derive(Clone, Debug)]
pub struct BwReport {
    pub s: usize,
    pub corollary15: bool,
    pub theorem8: bool,
    pub bw: bool,
    /// `{y | s∧y does not exist}`.
    pub w_set: ElemSet,
    /// Complement of `w_set`.
    pub u_set: ElemSet,
    pub off_core: ElemSet,
    pub r_candidates: ElemSet,
    pub corollary15_failures: Vec<Witness>,
    pub theorem8_failures: Vec<Witness>,
    pub bw_failures: Vec<Witness>,
}

impl BwReport {
    /// `both`, `corollary15`, `theorem8` or `neither`.
    pub fn variant_str(&self) -> &'static str {
        match (self.corollary15, self.theorem8) {
            (true, true) => "both",
            (true, false) => "corollary15",
            (false, true) => "theorem8",
            (false, false) => "neither",
        }
    }
}

pub fn bw_report(poset: &FinitePoset, s: usize) -> BwReport {
    let (w_set, u_set) = w_partition(poset, s);
    let corollary15_failures = corollary15_witnesses(poset, s);
    let theorem8_failures = theorem8_witnesses(poset, s);
    let bw_failures = bw_witnesses(poset, s);
    BwReport {
        s,
        corollary15: corollary15_failures.is_empty(),
        theorem8: theorem8_failures.is_empty(),
        bw: bw_failures.is_empty(),
        w_set,
        u_set,
        off_core: off_core(poset, s),
        r_candidates: off_core_minimal(poset, s),
        corollary15_failures,
        theorem8_failures,
        bw_failures,
    }
}

/// Split into `W = {y | s∧y missing}` and `U = P ∖ W`.
pub fn w_partition(poset: &FinitePoset, s: usize) -> (ElemSet, ElemSet) {
    let w: ElemSet = poset
        .elements()
        .filter(|&y| poset.meet(s, y).is_none())
        .collect();
    (w, poset.full_set() - w)
}

/// A checked claim failed on a concrete instance: either a real
/// counterexample to the mathematics or an implementation bug. These are
/// first-class outputs so harnesses can dump them verbatim.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Falsification {
    pub claim: String,
    pub details: String,
}

/// Failure modes of the hypothesis-dependent constructions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BwFailure {
    /// Caller violated a precondition (wrong input, hypothesis not checked).
    Precondition(Error),
    /// The construction itself broke down; would falsify the claim.
    Falsified(Falsification),
}

impl From<Error> for BwFailure {
    fn from(e: Error) -> Self {
        BwFailure::Precondition(e)
    }
}

impl core::fmt::Display for BwFailure {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            BwFailure::Precondition(e) => write!(f, "precondition: {e}"),
            BwFailure::Falsified(fal) => write!(f, "falsified: {} ({})", fal.claim, fal.details),
        }
    }
}

/// A map defined on an induced subposet, with the id translation back to
/// the parent poset.
pub struct SubposetMap {
    pub poset: FinitePoset,
    pub remap: IdRemap,
    pub map: PosetMap,
}

impl SubposetMap {
    /// Evaluate at a parent id (which must lie in the sub-poset), returning
    /// a parent id.
    pub fn apply_parent(&self, x: usize) -> Option<usize> {
        let inner = self.remap.to_sub(x)?;
        Some(self.remap.to_parent(self.map.apply(inner)))
    }
}

/// The projection `f(z) = s∧z` on `U`, defined whenever the `theorem8`
/// hypotheses hold. Satisfies `id_U ≥ f ≤ ⟨s⟩` pointwise.
pub fn meet_projection(poset: &FinitePoset, s: usize) -> Result<SubposetMap, BwFailure> {
    if !check_theorem8(poset, s) {
        return Err(Error::HypothesisNotSatisfied.into());
    }
    let (_, u_set) = w_partition(poset, s);
    let (sub, remap) = poset.induced_subposet(u_set)?;
    let mut values = Vec::with_capacity(sub.len());
    for z_sub in sub.elements() {
        let z = remap.to_parent(z_sub);
        let fz = poset.meet(s, z).expect("members of U meet s");
        // s∧(s∧z) = s∧z, so the image stays in U
        let fz_sub = remap.to_sub(fz).ok_or_else(|| {
            BwFailure::Falsified(Falsification {
                claim: String::from("meet projection lands in U"),
                details: format!("f({z}) = {fz} is outside U"),
            })
        })?;
        values.push(fz_sub);
    }
    let map = PosetMap::new(&sub, values).map_err(|_| {
        BwFailure::Falsified(Falsification {
            claim: String::from("meet projection is order-preserving"),
            details: format!("s = {s}"),
        })
    })?;
    Ok(SubposetMap {
        poset: sub,
        remap,
        map,
    })
}

/// The corridor `T` spanned by a nonempty chain `σ = {w_1 < .. < w_k} ⊆ W`:
/// the members of `U` below `w_1`, between consecutive `w_i`, or above
/// `w_k`. Equals the vertex set of `star(σ)|U` inside the order complex.
pub fn corridor(poset: &FinitePoset, s: usize, sigma: ElemSet) -> Result<ElemSet, Error> {
    let (w_set, u_set) = w_partition(poset, s);
    if sigma.is_empty() || !sigma.is_subset_of(w_set) || !poset.is_chain(sigma) {
        return Err(Error::NotAChainInW);
    }
    let ws = poset.sort_chain(sigma);
    let mut cells = poset.down_set(ws[0]) | poset.up_set(ws[ws.len() - 1]);
    for pair in ws.windows(2) {
        cells = cells | (poset.up_set(pair[0]) & poset.down_set(pair[1]));
    }
    Ok(u_set & cells)
}

/// The retraction `g` on the corridor of `σ`:
/// `g(t) = t∧s` when `t ≤ w_1`, otherwise `t∧(w_i∨s)` for the greatest `i`
/// with `w_i ≤ t`. Under the `theorem8` hypotheses every required meet and
/// join exists and `id_T ≥ g ≤ ⟨w_k∨s⟩`; any breakdown is reported as a
/// falsification.
pub fn corridor_retraction(
    poset: &FinitePoset,
    s: usize,
    sigma: ElemSet,
) -> Result<SubposetMap, BwFailure> {
    if !check_theorem8(poset, s) {
        return Err(Error::HypothesisNotSatisfied.into());
    }
    let t_set = corridor(poset, s, sigma)?;
    if t_set.is_empty() {
        return Err(BwFailure::Falsified(Falsification {
            claim: String::from("corridor of a chain in W is nonempty"),
            details: format!("s = {s}, sigma = {sigma:?}"),
        }));
    }
    let ws = poset.sort_chain(sigma);
    let (sub, remap) = poset.induced_subposet(t_set)?;
    let mut values = Vec::with_capacity(sub.len());
    for t_sub in sub.elements() {
        let t = remap.to_parent(t_sub);
        let greatest_below = ws.iter().rev().find(|&&w| poset.leq(w, t));
        let gt = match greatest_below {
            None => poset.meet(t, s).ok_or_else(|| {
                BwFailure::Falsified(Falsification {
                    claim: String::from("t∧s exists for corridor members below w_1"),
                    details: format!("t = {t}, s = {s}"),
                })
            })?,
            Some(&wi) => {
                let j = poset.join(wi, s).ok_or_else(|| {
                    BwFailure::Falsified(Falsification {
                        claim: String::from("w_i∨s exists for chain members of W"),
                        details: format!("w_i = {wi}, s = {s}"),
                    })
                })?;
                poset.meet(t, j).ok_or_else(|| {
                    BwFailure::Falsified(Falsification {
                        claim: String::from("t∧(w_i∨s) exists on the corridor"),
                        details: format!("t = {t}, w_i = {wi}, s = {s}"),
                    })
                })?
            }
        };
        let gt_sub = remap.to_sub(gt).ok_or_else(|| {
            BwFailure::Falsified(Falsification {
                claim: String::from("the retraction stays inside the corridor"),
                details: format!("g({t}) = {gt} left T = {t_set:?}"),
            })
        })?;
        values.push(gt_sub);
    }
    let map = PosetMap::new(&sub, values).map_err(|_| {
        BwFailure::Falsified(Falsification {
            claim: String::from("the corridor retraction is order-preserving"),
            details: format!("s = {s}, sigma = {sigma:?}"),
        })
    })?;
    Ok(SubposetMap {
        poset: sub,
        remap,
        map,
    })
}

/// Conclusion check for removal candidates: every lower cover of `r` lies
/// strictly below `s`.
pub fn lower_covers_below_s(poset: &FinitePoset, s: usize, r: usize) -> Result<bool, BwFailure> {
    if !check_bw_r(poset, s, r) {
        return Err(Error::HypothesisNotSatisfied.into());
    }
    Ok(poset.lower_covers(r).iter().all(|x| poset.lt(x, s)))
}

/// Deleting a removal candidate preserves the `bw` hypotheses. Returns the
/// smaller instance `(P ∖ {r}, s)` with the id translation.
pub fn deletion_subinstance(
    poset: &FinitePoset,
    s: usize,
    r: usize,
) -> Result<(FinitePoset, usize, IdRemap), BwFailure> {
    if !check_bw_r(poset, s, r) {
        return Err(Error::HypothesisNotSatisfied.into());
    }
    let (sub, remap) = poset.induced_subposet(poset.full_set().without(r))?;
    let s_new = remap.to_sub(s).expect("s survives deleting r");
    if !check_bw(&sub, s_new) {
        return Err(BwFailure::Falsified(Falsification {
            claim: String::from("bw survives deleting a minimal off-core element"),
            details: format!(
                "s = {s}, r = {r}, witnesses on the deletion: {:?}",
                bw_witnesses(&sub, s_new)
            ),
        }));
    }
    Ok((sub, s_new, remap))
}

/// Under the strengthened hypotheses (no unique lower cover), the
/// neighborhood `Q = (↑r ∪ ↓r) ∖ {r}` pointed at `q = r∨s` again satisfies
/// `bw`. The join must exist; a missing join is a falsification.
pub fn link_subinstance(
    poset: &FinitePoset,
    s: usize,
    r: usize,
) -> Result<(FinitePoset, usize, IdRemap), BwFailure> {
    if !check_bwi(poset, s, r) {
        return Err(Error::HypothesisNotSatisfied.into());
    }
    let q = poset.join(r, s).ok_or_else(|| {
        BwFailure::Falsified(Falsification {
            claim: String::from("r∨s exists when r has no unique lower cover"),
            details: format!("s = {s}, r = {r}"),
        })
    })?;
    let domain = (poset.up_set(r) | poset.down_set(r)).without(r);
    let (sub, remap) = poset.induced_subposet(domain)?;
    let q_new = remap
        .to_sub(q)
        .expect("r∨s is comparable to r and distinct from it");
    if !check_bw(&sub, q_new) {
        return Err(BwFailure::Falsified(Falsification {
            claim: String::from("bw holds on the punctured neighborhood of r at r∨s"),
            details: format!(
                "s = {s}, r = {r}, q = {q}, witnesses: {:?}",
                bw_witnesses(&sub, q_new)
            ),
        }));
    }
    Ok((sub, q_new, remap))
}

/// Replay of the removal induction for an instance satisfying `bw`.
#[derive(Clone, Debug)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct VerifyReport {
    pub n: usize,
    pub s: usize,
    /// Set when the off-core is empty: the order complex is a cone with
    /// this peak.
    pub cone_peak: Option<usize>,
    /// One entry per removal candidate examined.
    pub removals: Vec<RemovalStep>,
}

#[derive(Clone, Debug)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct RemovalStep {
    pub r: usize,
    /// Removal closed by the unique-lower-cover shortcut (the link is a
    /// cone), so no link recursion is needed.
    pub via_unique_lower_cover: bool,
    pub deletion: VerifyReport,
    pub link: Option<Box<VerifyReport>>,
}

impl VerifyReport {
    fn map_ids<F: Fn(usize) -> usize + Copy>(&self, f: F) -> VerifyReport {
        VerifyReport {
            n: self.n,
            s: f(self.s),
            cone_peak: self.cone_peak.map(f),
            removals: self
                .removals
                .iter()
                .map(|step| RemovalStep {
                    r: f(step.r),
                    via_unique_lower_cover: step.via_unique_lower_cover,
                    deletion: step.deletion.map_ids(f),
                    link: step.link.as_ref().map(|l| Box::new(l.map_ids(f))),
                })
                .collect(),
        }
    }
}

/// Replays the induction establishing that `bw` instances have non-evasive
/// order complexes, validating every intermediate claim:
///
/// * empty off-core: the order complex is a cone with peak `s`;
/// * otherwise, for each minimal off-core element `r` (all of them when
///   `check_all_r`, else just the first): the lower covers of `r` sit
///   strictly below `s`, the hypotheses survive deleting `r`, the order
///   complex of the deletion is the deletion of the order complex, and the
///   link either is a cone (unique lower cover) or is handled by recursing
///   into the punctured neighborhood at `r∨s`;
/// * finally the order complex itself must be non-evasive.
///
/// Ids in the returned tree all refer to the original poset.
pub fn verify_induction(
    poset: &FinitePoset,
    s: usize,
    check_all_r: bool,
    solver: &mut NonEvasiveSolver,
) -> Result<VerifyReport, BwFailure> {
    if !check_bw(poset, s) {
        return Err(Error::HypothesisNotSatisfied.into());
    }
    let delta = SimplicialComplex::order_complex(poset);
    let mut report = VerifyReport {
        n: poset.len(),
        s,
        cone_peak: None,
        removals: Vec::new(),
    };
    let oc = off_core(poset, s);
    if oc.is_empty() {
        if !delta.cone_peaks().contains(&(s as u32)) {
            return Err(BwFailure::Falsified(Falsification {
                claim: String::from("a poset equal to ↑s ∪ ↓s has a cone order complex"),
                details: format!("s = {s} is not a peak"),
            }));
        }
        report.cone_peak = Some(s);
    } else {
        let candidates: Vec<usize> = off_core_minimal(poset, s).iter().collect();
        let chosen: &[usize] = if check_all_r {
            &candidates
        } else {
            &candidates[..1]
        };
        for &r in chosen {
            if !lower_covers_below_s(poset, s, r)? {
                return Err(BwFailure::Falsified(Falsification {
                    claim: String::from("lower covers of removal candidates are below s"),
                    details: format!("s = {s}, r = {r}"),
                }));
            }
            let (sub, s_new, remap) = deletion_subinstance(poset, s, r)?;
            let sub_delta = SimplicialComplex::order_complex(&sub)
                .relabel(|l| remap.to_parent(l as usize) as u32)
                .expect("parent ids are distinct");
            if sub_delta != delta.deletion(&[r as u32])? {
                return Err(BwFailure::Falsified(Falsification {
                    claim: String::from(
                        "the order complex of a deletion is the deletion of the order complex",
                    ),
                    details: format!("s = {s}, r = {r}"),
                }));
            }
            let deletion_report = verify_induction(&sub, s_new, check_all_r, solver)?
                .map_ids(|id| remap.to_parent(id));
            let unique_lower = poset.lower_covers(r).len() == 1;
            let link = if unique_lower {
                // the link of r is a cone peaked at its unique lower cover
                let rstar = poset.lower_covers(r).first().unwrap();
                let lk = delta.link(&[r as u32])?;
                if !lk.cone_peaks().contains(&(rstar as u32)) {
                    return Err(BwFailure::Falsified(Falsification {
                        claim: String::from(
                            "the link at an element with a unique lower cover is a cone",
                        ),
                        details: format!("r = {r}, lower cover {rstar}"),
                    }));
                }
                None
            } else {
                let (q_poset, q, q_remap) = link_subinstance(poset, s, r)?;
                let q_delta = SimplicialComplex::order_complex(&q_poset)
                    .relabel(|l| q_remap.to_parent(l as usize) as u32)
                    .expect("parent ids are distinct");
                if q_delta != delta.link(&[r as u32])? {
                    return Err(BwFailure::Falsified(Falsification {
                        claim: String::from(
                            "the order complex of the punctured neighborhood is the link",
                        ),
                        details: format!("s = {s}, r = {r}"),
                    }));
                }
                let link_report = verify_induction(&q_poset, q, check_all_r, solver)?
                    .map_ids(|id| q_remap.to_parent(id));
                Some(Box::new(link_report))
            };
            report.removals.push(RemovalStep {
                r,
                via_unique_lower_cover: unique_lower,
                deletion: deletion_report,
                link,
            });
        }
    }
    let cert = solver.is_non_evasive(&delta)?;
    if cert.is_none() {
        return Err(BwFailure::Falsified(Falsification {
            claim: String::from("bw instances have non-evasive order complexes"),
            details: format!("n = {}, s = {s}", poset.len()),
        }));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{all_posets, named, Family};

    fn diamond() -> FinitePoset {
        named(Family::Diamond, 0).unwrap()
    }

    fn chain(n: usize) -> FinitePoset {
        named(Family::Chain, n).unwrap()
    }

    fn antichain(n: usize) -> FinitePoset {
        named(Family::Antichain, n).unwrap()
    }

    /// 0 < 2, 1 < 2, 1 < 3.
    fn n_poset() -> FinitePoset {
        FinitePoset::from_cover_relations(4, &[(0, 2), (1, 2), (1, 3)])
            .unwrap()
            .0
    }

    /// Bottom 0, atoms 1..=3, top 4; a lattice.
    fn m3() -> FinitePoset {
        FinitePoset::from_cover_relations(5, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])
            .unwrap()
            .0
    }

    #[test]
    fn corollary15_examples() {
        // s a maximum: s∧x = x always, condition (2) vacuous
        for p in [chain(4), diamond()] {
            let top = p.maximal_elements().first().unwrap();
            assert!(check_corollary15(&p, top));
        }
        // lattices satisfy everything at every s
        for s in 0..4 {
            assert!(check_corollary15(&diamond(), s));
        }
        let wits = corollary15_witnesses(&antichain(3), 0);
        assert_eq!(wits, [Witness::NoBound { x: 1 }, Witness::NoBound { x: 2 }]);
    }

    #[test]
    fn theorem8_examples() {
        for s in 0..4 {
            assert!(check_theorem8(&diamond(), s));
        }
        assert!(!check_theorem8(&antichain(2), 0));
        // Λ-shape: 0 and 1 minimal below a common top 2; W = {1} at s = 0
        let lambda = FinitePoset::from_cover_relations(3, &[(0, 2), (1, 2)])
            .unwrap()
            .0;
        assert!(check_theorem8(&lambda, 0));
        let (w, u) = w_partition(&lambda, 0);
        assert_eq!(w, ElemSet::singleton(1));
        assert_eq!(u, [0, 2].into_iter().collect());
    }

    #[test]
    fn theorem8_is_corollary15_on_the_dual() {
        for n in 1..=4 {
            for p in all_posets(n).unwrap() {
                let d = p.dual();
                for s in p.elements() {
                    assert_eq!(
                        check_theorem8(&p, s),
                        check_corollary15(&d, s),
                        "n = {n}, s = {s}, {p:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn bw_examples() {
        // P = ↑s ∪ ↓s: every element comparable to s
        let three = chain(3);
        for s in 0..3 {
            assert!(off_core(&three, s).is_empty());
            assert!(check_bw(&three, s));
        }
        // N poset at s = 0: element 3 has neither bound with 0
        let n = n_poset();
        assert_eq!(off_core(&n, 0), [1, 3].into_iter().collect());
        assert_eq!(off_core_minimal(&n, 0), ElemSet::singleton(1));
        assert_eq!(bw_witnesses(&n, 0), [Witness::NoBound { x: 3 }]);
        assert!(!check_bw_r(&n, 0, 1));
    }

    #[test]
    fn bw_is_corollary15_on_the_dual_literally() {
        // not just equal outcomes: identical witnesses up to orientation
        for n in 1..=5 {
            for p in all_posets(n).unwrap() {
                let d = p.dual();
                for s in p.elements() {
                    let bw: Vec<Witness> = bw_witnesses(&p, s);
                    let mut c15: Vec<Witness> = corollary15_witnesses(&d, s)
                        .into_iter()
                        .map(|w| match w {
                            Witness::NoBound { x } => Witness::NoBound { x },
                            // dual order flips the pair orientation
                            Witness::MissingExtension { lower, upper } => {
                                Witness::MissingExtension {
                                    lower: upper,
                                    upper: lower,
                                }
                            }
                        })
                        .collect();
                    c15.sort();
                    assert_eq!(bw, c15, "n = {n}, s = {s}, {p:?}");
                }
            }
        }
    }

    #[test]
    fn bwi_requires_no_unique_lower_cover() {
        // whenever r has exactly one lower cover, bwi must fail
        for n in 1..=4 {
            for p in all_posets(n).unwrap() {
                for s in p.elements() {
                    for r in p.elements() {
                        if p.lower_covers(r).len() == 1 {
                            assert!(!check_bwi(&p, s, r));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn meet_projection_examples() {
        // s the maximum: U = P and f is the identity
        let d = diamond();
        let f = meet_projection(&d, 3).unwrap();
        assert_eq!(f.poset.len(), 4);
        for z in d.elements() {
            assert_eq!(f.apply_parent(z), Some(z));
        }
        // s an atom of the diamond: f(z) = s∧z
        let f = meet_projection(&d, 1).unwrap();
        assert_eq!(f.apply_parent(0), Some(0));
        assert_eq!(f.apply_parent(1), Some(1));
        assert_eq!(f.apply_parent(2), Some(0));
        assert_eq!(f.apply_parent(3), Some(1));
        // f(s) = s and the chain condition id ≥ f ≤ ⟨s⟩ pointwise
        for p in all_posets(4).unwrap() {
            for s in p.elements() {
                if !check_theorem8(&p, s) {
                    continue;
                }
                let f = meet_projection(&p, s).unwrap();
                assert_eq!(f.apply_parent(s), Some(s));
                let (_, u) = w_partition(&p, s);
                for z in u.iter() {
                    let fz = f.apply_parent(z).unwrap();
                    assert!(p.leq(fz, z) && p.leq(fz, s));
                }
            }
        }
    }

    #[test]
    fn corridor_examples() {
        // Λ-shape at s = 0: σ = {1} gives T = {2}
        let lambda = FinitePoset::from_cover_relations(3, &[(0, 2), (1, 2)])
            .unwrap()
            .0;
        let t = corridor(&lambda, 0, ElemSet::singleton(1)).unwrap();
        assert_eq!(t, ElemSet::singleton(2));
        // single maximal w: T = (U ∩ ↓w) ∪ (U ∩ ↑w)
        let (w_set, u_set) = w_partition(&lambda, 0);
        assert_eq!(w_set, ElemSet::singleton(1));
        let unfolded = (u_set & lambda.down_set(1)) | (u_set & lambda.up_set(1));
        assert_eq!(t, unfolded);
        // σ must be a nonempty chain inside W
        assert_eq!(
            corridor(&lambda, 0, ElemSet::EMPTY),
            Err(Error::NotAChainInW)
        );
        assert_eq!(
            corridor(&lambda, 0, ElemSet::singleton(0)),
            Err(Error::NotAChainInW)
        );
    }

    #[test]
    fn corridor_matches_star_restriction() {
        // Δ(T) = star(σ)|U as complexes, on every small theorem8 instance
        for n in 1..=4 {
            for p in all_posets(n).unwrap() {
                for s in p.elements() {
                    if !check_theorem8(&p, s) {
                        continue;
                    }
                    let (w_set, u_set) = w_partition(&p, s);
                    let delta = SimplicialComplex::order_complex(&p);
                    let u_labels: Vec<u32> = u_set.iter().map(|e| e as u32).collect();
                    for bits in 1u64..1 << p.len() {
                        let sigma = ElemSet::from_bits(bits);
                        if !sigma.is_subset_of(w_set) || !p.is_chain(sigma) {
                            continue;
                        }
                        let t = corridor(&p, s, sigma).unwrap();
                        assert!(!t.is_empty());
                        let sigma_labels: Vec<u32> = sigma.iter().map(|e| e as u32).collect();
                        let star_u = delta.star(&sigma_labels).unwrap().restrict(&u_labels);
                        let t_labels: Vec<u32> = t.iter().map(|e| e as u32).collect();
                        let delta_t = delta.restrict(&t_labels);
                        assert_eq!(star_u, delta_t, "s = {s}, sigma = {sigma:?}, {p:?}");
                        // s∨w_k lands in T
                        let ws = p.sort_chain(sigma);
                        let top_join = p.join(s, ws[ws.len() - 1]).unwrap();
                        assert!(t.contains(top_join));
                    }
                }
            }
        }
    }

    #[test]
    fn corridor_retraction_cases() {
        let lambda = FinitePoset::from_cover_relations(3, &[(0, 2), (1, 2)])
            .unwrap()
            .0;
        let g = corridor_retraction(&lambda, 0, ElemSet::singleton(1)).unwrap();
        // T = {2}: t = 2 sits above w_1 = 1, so g(2) = 2∧(1∨0) = 2
        assert_eq!(g.apply_parent(2), Some(2));
        // chain conditions on all small instances
        for n in 1..=4 {
            for p in all_posets(n).unwrap() {
                for s in p.elements() {
                    if !check_theorem8(&p, s) {
                        continue;
                    }
                    let (w_set, _) = w_partition(&p, s);
                    for bits in 1u64..1 << p.len() {
                        let sigma = ElemSet::from_bits(bits);
                        if !sigma.is_subset_of(w_set) || !p.is_chain(sigma) {
                            continue;
                        }
                        let g = corridor_retraction(&p, s, sigma).unwrap();
                        let ws = p.sort_chain(sigma);
                        let peak = p.join(ws[ws.len() - 1], s).unwrap();
                        for t_sub in g.poset.elements() {
                            let t = g.remap.to_parent(t_sub);
                            let gt = g.remap.to_parent(g.map.apply(t_sub));
                            assert!(p.leq(gt, t), "id_T ≥ g at {t}");
                            assert!(p.leq(gt, peak), "g ≤ ⟨w_k∨s⟩ at {t}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn removal_lemmas_small_exhaustive() {
        for n in 1..=4 {
            for p in all_posets(n).unwrap() {
                for s in p.elements() {
                    if !check_bw(&p, s) {
                        continue;
                    }
                    for r in off_core_minimal(&p, s).iter() {
                        assert!(lower_covers_below_s(&p, s, r).unwrap(), "{p:?} s={s} r={r}");
                        assert!(deletion_subinstance(&p, s, r).is_ok(), "{p:?} s={s} r={r}");
                        if check_bwi(&p, s, r) {
                            let (q_poset, q, _) = link_subinstance(&p, s, r).unwrap();
                            assert!(check_bw(&q_poset, q));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn lower_cover_checks() {
        // r with a lower cover: the cover must lie strictly below s
        let n = n_poset();
        assert!(check_bw_r(&n, 2, 3));
        assert_eq!(n.lower_covers(3), ElemSet::singleton(1));
        assert_eq!(lower_covers_below_s(&n, 2, 3), Ok(true));
        // r minimal in P (no lower covers): vacuously true
        let lambda = FinitePoset::from_cover_relations(3, &[(0, 2), (1, 2)])
            .unwrap()
            .0;
        assert!(check_bw_r(&lambda, 0, 1));
        assert!(lambda.lower_covers(1).is_empty());
        assert_eq!(lower_covers_below_s(&lambda, 0, 1), Ok(true));
    }

    #[test]
    fn verify_induction_cone_case() {
        // P = ↑s ∪ ↓s: single cone node
        let three = chain(3);
        let mut solver = NonEvasiveSolver::new();
        let report = verify_induction(&three, 1, true, &mut solver).unwrap();
        assert_eq!(report.cone_peak, Some(1));
        assert!(report.removals.is_empty());
    }

    #[test]
    fn verify_induction_removal_case() {
        // M3 at an atom: off-core is the other two atoms
        let p = m3();
        assert!(check_bw(&p, 1));
        assert_eq!(off_core(&p, 1), [2, 3].into_iter().collect());
        let mut solver = NonEvasiveSolver::new();
        let report = verify_induction(&p, 1, true, &mut solver).unwrap();
        assert_eq!(report.removals.len(), 2);
        for step in &report.removals {
            // atoms of M3 have the bottom as unique lower cover
            assert!(step.via_unique_lower_cover);
            assert!(step.link.is_none());
        }
    }

    #[test]
    fn verify_induction_small_exhaustive() {
        let mut solver = NonEvasiveSolver::new();
        for n in 1..=4 {
            for p in all_posets(n).unwrap() {
                for s in p.elements() {
                    if check_bw(&p, s) {
                        assert!(
                            verify_induction(&p, s, true, &mut solver).is_ok(),
                            "{p:?} s={s}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn verify_induction_requires_hypotheses() {
        let mut solver = NonEvasiveSolver::new();
        let bad = antichain(3);
        assert!(matches!(
            verify_induction(&bad, 0, true, &mut solver),
            Err(BwFailure::Precondition(Error::HypothesisNotSatisfied))
        ));
    }

    #[test]
    fn report_assembly() {
        let d = diamond();
        let rep = bw_report(&d, 1);
        assert_eq!(rep.variant_str(), "both");
        assert!(rep.bw);
        assert!(rep.off_core.is_empty() == (d.full_set() == (d.up_set(1) | d.down_set(1))));
        let rep = bw_report(&antichain(3), 0);
        assert_eq!(rep.variant_str(), "neither");
        assert_eq!(rep.w_set, [1, 2].into_iter().collect());
    }
}
