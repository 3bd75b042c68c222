//! The four exhaustive enumeration pipelines.
//!
//! Each pipeline reproduces the exact survivor counts and digraphs of the
//! recorded reference runs: the 2^15 orientation sweep over F, the 32
//! dominated extensions of the T-family, the digon-completion closure with
//! its one- and two-extensions, and the per-maximum-acyclic-set-size
//! generation of all remaining candidates.

mod report;
mod store;

pub use report::{
    classify_report, completions_report, f_plus_report, max_acyclic_report, sweep_f_report,
};
pub use store::CandidateStore;

use crate::catalog::{self, ObstructionSet};
use crate::dicolour::{self, has_uv_colouring_of_deleted, is_two_dicolourable};
use crate::digraph::{contains_pattern, Digraph, PatternQuery};
use rayon::prelude::*;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EnumerateError {
    #[error("maximum acyclic set size {0} out of range (must be 1..=7)")]
    StableSizeOutOfRange(usize),
    #[error("orientation code length {len} does not match digraph order {order}")]
    CodeLengthMismatch { len: usize, order: usize },
    #[error("extension would exceed the {0}-vertex cap")]
    ExtensionExceedsOrderCap(usize),
}

/// Base-3 word describing how a new vertex relates to each existing vertex:
/// digit i is 0 for `i -> new`, 1 for `new -> i`, 2 for a digon.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientationCode {
    digits: Vec<u8>,
}

impl OrientationCode {
    /// The `k`-th code of length `len` (most significant digit first).
    pub fn from_index(k: u64, len: usize) -> Self {
        debug_assert!(k < 3u64.pow(len as u32));
        let mut digits = vec![0u8; len];
        let mut rest = k;
        for slot in digits.iter_mut().rev() {
            *slot = (rest % 3) as u8;
            rest /= 3;
        }
        OrientationCode { digits }
    }

    pub fn to_index(&self) -> u64 {
        self.digits.iter().fold(0u64, |acc, &d| acc * 3 + d as u64)
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// The one-vertex extension of `d` described by this code. The code
    /// length must equal the order of `d`.
    pub fn apply(&self, d: &Digraph) -> Result<Digraph, EnumerateError> {
        if self.digits.len() != d.order() {
            return Err(EnumerateError::CodeLengthMismatch {
                len: self.digits.len(),
                order: d.order(),
            });
        }
        let n = d.order() + 1;
        let mut out = Digraph::new(n)
            .map_err(|_| EnumerateError::ExtensionExceedsOrderCap(crate::digraph::MAX_ORDER))?;
        for (u, v) in d.arcs() {
            out.add_arc(u, v).expect("embedding preserves arcs");
        }
        let new = n - 1;
        for (v, &digit) in self.digits.iter().enumerate() {
            match digit {
                0 => out.add_arc(v, new).expect("valid arc"),
                1 => out.add_arc(new, v).expect("valid arc"),
                _ => {
                    out.add_arc(v, new).expect("valid arc");
                    out.add_arc(new, v).expect("valid arc");
                }
            }
        }
        Ok(out)
    }
}

/// The candidate filter shared by all pipelines: `d` must avoid every
/// forbidden subdigraph and forbidden induced subdigraph, and must admit a
/// uv-colouring for each of its arcs.
///
/// All three conditions are antitone under arc addition (forbidden-pattern
/// hits are monotone, uv-colourings only disappear), so a failure on a
/// partial digraph rules out every completion. The induced patterns used by
/// the pipelines are tournaments, whose matches live entirely on decided
/// vertex pairs, which keeps the induced check sound on partial digraphs
/// too.
pub fn candidate_filter(d: &Digraph, obs: &ObstructionSet) -> bool {
    for pattern in &obs.forbidden_subdigraphs {
        if contains_pattern(d, &PatternQuery::subdigraph(*pattern)) {
            return false;
        }
    }
    for pattern in &obs.forbidden_induced_subdigraphs {
        if contains_pattern(d, &PatternQuery::induced(*pattern)) {
            return false;
        }
    }
    // check arcs at the newest vertices first: during extension these are the
    // ones whose uv-colourings have not been vetted before
    let mut arcs: Vec<(usize, usize)> = d.arcs().collect();
    arcs.sort_by_key(|&(u, v)| std::cmp::Reverse((u.max(v), u, v)));
    for (u, v) in arcs {
        let deleted = d.delete_arc(u, v).expect("arc from iterator");
        if !has_uv_colouring_of_deleted(&deleted, u, v) {
            return false;
        }
    }
    true
}

/// The 15 originally unordered vertex pairs of F, in sweep order.
const F_MISSING_PAIRS: [(usize, usize); 15] = [
    (6, 2),
    (6, 3),
    (6, 4),
    (6, 5),
    (6, 7),
    (6, 8),
    (7, 0),
    (7, 1),
    (7, 4),
    (7, 5),
    (7, 8),
    (8, 0),
    (8, 1),
    (8, 2),
    (8, 3),
];

/// The tournament of the F-family selected by a 15-bit code: bit k (most
/// significant first) orients the k-th missing pair, 0 keeping the listed
/// direction.
fn f_family_member(code: u32) -> Digraph {
    let mut d = catalog::f();
    for (k, &(a, b)) in F_MISSING_PAIRS.iter().enumerate() {
        if code >> (14 - k) & 1 == 0 {
            d.add_arc(a, b).expect("valid pair");
        } else {
            d.add_arc(b, a).expect("valid pair");
        }
    }
    d
}

/// Sweeps all 2^15 tournaments containing F and keeps those with no
/// C3=>C3 and a uv-colouring for every arc. The survivors come back in
/// ascending code order and coincide with the recorded T-family matrices.
pub fn sweep_f_family() -> Vec<Digraph> {
    let obs = ObstructionSet::new(vec![], vec![catalog::c3_join_c3()])
        .expect("single obstruction");
    (0u32..1 << 15)
        .into_par_iter()
        .map(|code| {
            let d = f_family_member(code);
            candidate_filter(&d, &obs).then_some(d)
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

/// Outcome of the dominated-extension sweep that excludes F-plus.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FPlusSweep {
    pub examined: usize,
    pub survivors: usize,
}

/// For each T-family member, adds a vertex dominating the TT6 part and tries
/// all 2^3 orientations towards the remaining three vertices. Counts the
/// extensions that survive the candidate filter; the recorded run finds
/// none.
pub fn check_f_plus_extensions() -> FPlusSweep {
    let obs = ObstructionSet::new(vec![], vec![catalog::c3_join_c3()])
        .expect("single obstruction");
    let family = catalog::t_family();
    let mut examined = 0;
    let mut survivors = 0;
    for orientation in 0u8..8 {
        for t in &family {
            let mut d = Digraph::new(10).expect("within cap");
            for (u, v) in t.arcs() {
                d.add_arc(u, v).expect("embedding preserves arcs");
            }
            for v in 0..6 {
                d.add_arc(9, v).expect("dominating arcs");
            }
            for (c, v) in (6..9).enumerate() {
                if orientation >> (2 - c) & 1 == 0 {
                    d.add_arc(v, 9).expect("valid arc");
                } else {
                    d.add_arc(9, v).expect("valid arc");
                }
            }
            examined += 1;
            if candidate_filter(&d, &obs) {
                survivors += 1;
            }
        }
    }
    FPlusSweep { examined, survivors }
}

/// The closure of `seeds` under replacing one simple arc by a digon, keeping
/// only digraphs that pass the candidate filter. Seeds enter unfiltered and
/// deduplication is up to isomorphism.
pub fn digon_completions(seeds: &[Digraph], obs: &ObstructionSet) -> CandidateStore {
    let store = CandidateStore::new();
    let mut frontier: Vec<Digraph> = Vec::new();
    for seed in seeds {
        if store.insert_if_new(seed) {
            frontier.push(*seed);
        }
    }
    while !frontier.is_empty() {
        let next: Vec<Digraph> = frontier
            .par_iter()
            .flat_map_iter(|d| {
                let d = *d;
                let arcs: Vec<(usize, usize)> = d
                    .arcs()
                    .filter(|&(u, v)| !d.has_arc(v, u))
                    .collect();
                arcs.into_iter().filter_map(move |(u, v)| {
                    let mut grown = d;
                    grown.add_arc(v, u).expect("reverse of an existing arc");
                    candidate_filter(&grown, obs).then_some(grown)
                })
            })
            .collect();
        frontier = next
            .into_iter()
            .filter(|d| store.insert_if_new(d))
            .map(|d| crate::digraph::canonical_form(&d))
            .collect();
    }
    store
}

/// All one-vertex extensions of the store's members that pass the filter,
/// deduplicated up to isomorphism. Every orientation code of the matching
/// length is tried, so the result is independent of representatives.
pub fn one_extensions(store: &CandidateStore, obs: &ObstructionSet) -> CandidateStore {
    let out = CandidateStore::new();
    let members = store.members();
    members.par_iter().for_each(|d| {
        let codes = 3u64.pow(d.order() as u32);
        (0..codes).into_par_iter().for_each(|k| {
            let ext = OrientationCode::from_index(k, d.order())
                .apply(d)
                .expect("code length matches order");
            if candidate_filter(&ext, obs) {
                out.insert_if_new(&ext);
            }
        });
    });
    out
}

/// One generation of the final enumeration.
#[derive(Clone, Debug)]
pub struct MaxAcyclicGeneration {
    /// Vertex count of this generation's candidates.
    pub order: usize,
    /// Surviving candidates, canonical forms in ascending code order.
    pub members: Vec<Digraph>,
    /// The members that are not 2-dicolourable, hence 3-dicritical.
    pub dicritical: Vec<Digraph>,
    /// Members whose maximum acyclic set size differs from the target
    /// (only populated by the optional verification pass; expected empty).
    pub max_acyclic_mismatches: Vec<(Digraph, usize)>,
}

/// The full record of one `enumerate_by_max_acyclic` run.
#[derive(Clone, Debug)]
pub struct MaxAcyclicRun {
    /// The prescribed maximum acyclic set size i.
    pub stable_size: usize,
    /// Generations on i+1, i+2, ... vertices; the last one is empty.
    pub generations: Vec<MaxAcyclicGeneration>,
}

impl MaxAcyclicRun {
    pub fn counts(&self) -> Vec<usize> {
        self.generations.iter().map(|g| g.members.len()).collect()
    }

    pub fn dicritical_counts(&self) -> Vec<usize> {
        self.generations.iter().map(|g| g.dicritical.len()).collect()
    }

    pub fn dicritical_members(&self) -> Vec<Digraph> {
        self.generations
            .iter()
            .flat_map(|g| g.dicritical.iter().copied())
            .collect()
    }
}

/// Generates all semi-complete digraphs whose maximum acyclic set has size
/// exactly `i` and that could sit inside a 3-dicritical semi-complete
/// digraph, growing from TT_i one vertex at a time until a generation dies
/// out. Reports which candidates fail 2-dicolourability.
pub fn enumerate_by_max_acyclic(
    i: usize,
    verify_max_acyclic: bool,
) -> Result<MaxAcyclicRun, EnumerateError> {
    if i == 0 || i > 7 {
        return Err(EnumerateError::StableSizeOutOfRange(i));
    }
    let induced = if i < 7 {
        vec![catalog::tt(i + 1).expect("small order")]
    } else {
        catalog::reversed_tt8_family()
    };
    let obs = catalog::standard_obstructions(induced);

    let mut generations = Vec::new();
    let mut current = vec![catalog::tt(i).expect("small order")];
    let mut order = i + 1;
    loop {
        let store = CandidateStore::new();
        current.par_iter().for_each(|d| {
            extend_pruned(d, &obs, &store);
        });
        let members = store.members();
        let dicritical: Vec<Digraph> = members
            .iter()
            .filter(|d| !is_two_dicolourable(d))
            .copied()
            .collect();
        let max_acyclic_mismatches = if verify_max_acyclic {
            members
                .iter()
                .map(|d| (*d, dicolour::max_acyclic_subset_size(d)))
                .filter(|&(_, size)| size != i)
                .collect()
        } else {
            Vec::new()
        };
        let empty = members.is_empty();
        generations.push(MaxAcyclicGeneration {
            order,
            members: members.clone(),
            dicritical,
            max_acyclic_mismatches,
        });
        if empty {
            break;
        }
        current = members;
        order += 1;
    }
    Ok(MaxAcyclicRun { stable_size: i, generations })
}

/// All filter-surviving one-vertex extensions of `d`, found by deciding the
/// new vertex's relation to the old vertices in ascending label order and
/// running the (antitone) candidate filter after every decision.
fn extend_pruned(d: &Digraph, obs: &ObstructionSet, out: &CandidateStore) {
    let n = d.order() + 1;
    let mut base = Digraph::new(n).expect("within cap");
    for (u, v) in d.arcs() {
        base.add_arc(u, v).expect("embedding preserves arcs");
    }
    extend_pruned_rec(&base, 0, obs, out);
}

/// Subtrees for the first few undecided vertices fan out as parallel tasks;
/// deeper levels stay sequential.
const PARALLEL_DIGITS: usize = 3;

fn extend_pruned_rec(d: &Digraph, decided: usize, obs: &ObstructionSet, out: &CandidateStore) {
    let n = d.order();
    if decided == n - 1 {
        out.insert_if_new(d);
        return;
    }
    if decided < PARALLEL_DIGITS {
        (0u8..3).into_par_iter().for_each(|digit| {
            let mut child = *d;
            add_relation(&mut child, decided, digit);
            if candidate_filter(&child, obs) {
                extend_pruned_rec(&child, decided + 1, obs, out);
            }
        });
    } else {
        for digit in 0u8..3 {
            let mut child = *d;
            add_relation(&mut child, decided, digit);
            if candidate_filter(&child, obs) {
                extend_pruned_rec(&child, decided + 1, obs, out);
            }
        }
    }
}

fn add_relation(d: &mut Digraph, old: usize, digit: u8) {
    let new = d.order() - 1;
    match digit {
        0 => d.add_arc(old, new).expect("valid arc"),
        1 => d.add_arc(new, old).expect("valid arc"),
        _ => {
            d.add_arc(old, new).expect("valid arc");
            d.add_arc(new, old).expect("valid arc");
        }
    }
}

/// The record of the completion pipeline: digon completions of the T-family
/// followed by repeated one-vertex extensions until nothing survives.
#[derive(Clone, Debug)]
pub struct CompletionsRun {
    /// Stage 0 is the completion closure, stage k its k-th extension layer.
    pub stages: Vec<CompletionsStage>,
}

#[derive(Clone, Debug)]
pub struct CompletionsStage {
    pub members: Vec<Digraph>,
    pub dicritical: usize,
}

/// Runs the completion pipeline with its recorded obstruction set: the seven
/// standard forbidden subdigraphs other than F, plus induced TT8.
pub fn run_f_completions() -> CompletionsRun {
    let obs = ObstructionSet::new(
        vec![
            catalog::s4_bidirected(),
            catalog::k2_join_k2(),
            catalog::o4(),
            catalog::o5(),
            catalog::k2_join_c3(),
            catalog::c3_join_k2(),
            catalog::c3_join_c3(),
        ],
        vec![catalog::tt(8).expect("small order")],
    )
    .expect("pairwise non-isomorphic obstructions");

    let mut stages = Vec::new();
    let completions = digon_completions(&catalog::t_family(), &obs);
    let mut current = completions;
    loop {
        let members = current.members();
        let dicritical = members.iter().filter(|d| !is_two_dicolourable(d)).count();
        let empty = members.is_empty();
        stages.push(CompletionsStage { members, dicritical });
        if empty || stages.len() == 3 {
            break;
        }
        current = one_extensions(&current, &obs);
    }
    CompletionsRun { stages }
}

/// The classification assembled end to end: the dicritical digraphs found by the
/// per-size enumerations together with the structurally forced ones, as
/// canonical forms in ascending code order. The expected outcome is eight
/// classes, two of them tournaments.
pub fn classify() -> Result<Vec<Digraph>, EnumerateError> {
    let store = CandidateStore::new();
    for i in 1..=7 {
        let run = enumerate_by_max_acyclic(i, false)?;
        for d in run.dicritical_members() {
            store.insert_if_new(&d);
        }
    }
    store.insert_if_new(&catalog::w3());
    for (h1, h2) in [
        (catalog::RotPart::BidirectedK2, catalog::RotPart::BidirectedK2),
        (catalog::RotPart::BidirectedK2, catalog::RotPart::C3),
        (catalog::RotPart::C3, catalog::RotPart::BidirectedK2),
        (catalog::RotPart::C3, catalog::RotPart::C3),
    ] {
        store.insert_if_new(&catalog::rotative(h1, h2));
    }
    Ok(store.members())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::canonical_code;

    #[test]
    fn orientation_code_round_trip() {
        for len in 1..=5usize {
            let total = 3u64.pow(len as u32);
            for k in 0..total {
                let code = OrientationCode::from_index(k, len);
                assert_eq!(code.to_index(), k);
                assert_eq!(code.len(), len);
            }
        }
    }

    #[test]
    fn orientation_code_application() {
        let digon_code = OrientationCode::from_index(2, 1);
        assert_eq!(digon_code.digits(), &[2]);
        let ext = digon_code.apply(&Digraph::new(1).unwrap()).unwrap();
        assert!(ext.has_digon(0, 1));

        let c3 = catalog::c3();
        assert!(matches!(
            OrientationCode::from_index(0, 2).apply(&c3),
            Err(EnumerateError::CodeLengthMismatch { .. })
        ));
        let full = catalog::tt(16).unwrap();
        assert!(matches!(
            OrientationCode::from_index(0, 16).apply(&full),
            Err(EnumerateError::ExtensionExceedsOrderCap(16))
        ));
        // every extension of a semi-complete digraph is semi-complete
        for k in 0..27 {
            let ext = OrientationCode::from_index(k, 3).apply(&c3).unwrap();
            assert!(ext.is_semicomplete());
        }
    }

    #[test]
    fn filter_examples() {
        let obs = catalog::standard_obstructions(vec![]);
        assert!(candidate_filter(&catalog::bidirected_k(3).unwrap(), &obs));
        // adding an O5 makes any host fail
        assert!(!candidate_filter(&catalog::o5(), &obs));

        let tt9 = catalog::tt(9).unwrap();
        let obs_tt8 = ObstructionSet::new(vec![], vec![catalog::tt(8).unwrap()]).unwrap();
        assert!(!candidate_filter(&tt9, &obs_tt8));
    }

    #[test]
    fn empty_seed_closures() {
        let obs = catalog::standard_obstructions(vec![]);
        let store = digon_completions(&[], &obs);
        assert!(store.is_empty());
        let ext = one_extensions(&store, &obs);
        assert!(ext.is_empty());
    }

    #[test]
    fn small_enumeration_counts() {
        let run = enumerate_by_max_acyclic(1, true).unwrap();
        assert_eq!(run.counts(), vec![1, 1, 0]);
        assert_eq!(run.dicritical_counts(), vec![0, 1, 0]);
        let dic = run.dicritical_members();
        assert_eq!(
            canonical_code(&dic[0]),
            canonical_code(&catalog::bidirected_k(3).unwrap())
        );
        assert!(run.generations.iter().all(|g| g.max_acyclic_mismatches.is_empty()));

        let run = enumerate_by_max_acyclic(2, false).unwrap();
        assert_eq!(run.counts(), vec![5, 5, 0]);
        assert_eq!(run.dicritical_counts(), vec![0, 0, 0]);

        assert!(enumerate_by_max_acyclic(0, false).is_err());
        assert!(enumerate_by_max_acyclic(8, false).is_err());
    }

    #[test]
    fn pruned_generation_matches_unpruned() {
        // the pruning argument: rebuilding each generation by unpruned code
        // enumeration gives the same class sets
        for i in 1..=3usize {
            let induced = vec![catalog::tt(i + 1).unwrap()];
            let obs = catalog::standard_obstructions(induced);
            let run = enumerate_by_max_acyclic(i, false).unwrap();
            let mut current = CandidateStore::new();
            current.insert_if_new(&catalog::tt(i).unwrap());
            for generation in &run.generations {
                let next = one_extensions(&current, &obs);
                let mut expected: Vec<_> =
                    generation.members.iter().map(canonical_code).collect();
                expected.sort();
                let mut got: Vec<_> = next.members().iter().map(canonical_code).collect();
                got.sort();
                assert_eq!(got, expected, "generation of order {}", generation.order);
                current = next;
            }
        }
    }
}
