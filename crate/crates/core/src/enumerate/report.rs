//! Diff-stable text reports for the pipelines.
//!
//! Every report is a sequence of generations: one header line
//! `pipeline=<name> generation=<g> count=<k>` (plus pipeline-specific
//! key=value extras), followed by the `.dmat` blocks of the survivors in
//! canonical-code order, each block terminated by a blank line.

use super::{CompletionsRun, FPlusSweep, MaxAcyclicRun};
use crate::digraph::{canonical_code, to_dmat, Digraph};

fn push_header(out: &mut String, pipeline: &str, generation: &str, count: usize, extras: &str) {
    out.push_str(&format!("pipeline={pipeline} generation={generation} count={count}"));
    if !extras.is_empty() {
        out.push(' ');
        out.push_str(extras);
    }
    out.push('\n');
}

fn push_blocks_sorted(out: &mut String, members: &[Digraph]) {
    let mut sorted: Vec<&Digraph> = members.iter().collect();
    sorted.sort_by_key(|d| canonical_code(d));
    for d in sorted {
        out.push_str(&to_dmat(d));
        out.push('\n');
    }
}

/// Report of the 2^15 orientation sweep. The survivor blocks keep the sweep
/// labelling (they are compared byte-for-byte against the golden matrices).
pub fn sweep_f_report(survivors: &[Digraph]) -> String {
    let mut out = String::new();
    push_header(&mut out, "sweep-f", "0", survivors.len(), "");
    push_blocks_sorted(&mut out, survivors);
    out
}

/// Report of the dominated-extension sweep.
pub fn f_plus_report(sweep: &FPlusSweep) -> String {
    let mut out = String::new();
    push_header(
        &mut out,
        "f-plus",
        "0",
        sweep.survivors,
        &format!("examined={}", sweep.examined),
    );
    out
}

/// Report of the digon-completion pipeline, one generation per stage.
pub fn completions_report(run: &CompletionsRun) -> String {
    let mut out = String::new();
    for (g, stage) in run.stages.iter().enumerate() {
        push_header(
            &mut out,
            "f-completions",
            &g.to_string(),
            stage.members.len(),
            &format!("dicritical={}", stage.dicritical),
        );
        push_blocks_sorted(&mut out, &stage.members);
    }
    out
}

/// Report of one per-maximum-acyclic-size enumeration, one generation per
/// vertex count plus a trailing section listing the dicritical findings.
pub fn max_acyclic_report(run: &MaxAcyclicRun) -> String {
    let name = format!("enumerate-{}", run.stable_size);
    let mut out = String::new();
    for (g, generation) in run.generations.iter().enumerate() {
        let mut extras = format!(
            "order={} dicritical={}",
            generation.order,
            generation.dicritical.len()
        );
        if !generation.max_acyclic_mismatches.is_empty() {
            extras.push_str(&format!(
                " max_acyclic_mismatches={}",
                generation.max_acyclic_mismatches.len()
            ));
        }
        push_header(&mut out, &name, &(g + 1).to_string(), generation.members.len(), &extras);
        push_blocks_sorted(&mut out, &generation.members);
    }
    let dicritical = run.dicritical_members();
    push_header(&mut out, &name, "dicritical", dicritical.len(), "");
    push_blocks_sorted(&mut out, &dicritical);
    out
}

/// Report of the end-to-end classification.
pub fn classify_report(classes: &[Digraph]) -> String {
    let tournaments = classes.iter().filter(|d| d.is_tournament()).count();
    let mut out = String::new();
    push_header(
        &mut out,
        "classify",
        "0",
        classes.len(),
        &format!("tournaments={tournaments}"),
    );
    push_blocks_sorted(&mut out, classes);
    out
}
