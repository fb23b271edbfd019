//! Desk-scale audits of the word structure: completability of its induced
//! cycles and invariance of pair structures under substitution.

use std::collections::BTreeMap;

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bigramsey::context::GContext;
use crate::bigramsey::truncation::{g_truncation, vertex_words};
use crate::caps;
use crate::completion::{complete, cycle_has_completion, trial_rng, CompletionResult, PRNG_ID};
use crate::error::{Error, Result};
use crate::paramwords::{apply_params, Word};
use crate::relstruct::{
    for_each_induced_cycle, induced, induced_cycles, is_homomorphism_embedding, Cycle, Structure,
};

#[derive(Clone, Debug, Serialize)]
pub struct CycleFailure {
    pub cycle: Vec<String>,
    pub reason: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CycleAuditReport {
    pub rule: &'static str,
    pub n: usize,
    pub lmax: usize,
    pub vertices: usize,
    pub cycles: usize,
    pub cycles_by_length: BTreeMap<usize, usize>,
    /// Cycles whose shortest vertex is shared, so that the merged structure
    /// was built and checked.
    pub merged_checks: usize,
    pub failures: Vec<CycleFailure>,
}

/// The cycle plus, for every vertex longer than the first, the pair from
/// the first vertex carrying that vertex's letter at the first vertex's
/// length. `order` lists the cycle starting at a shortest vertex.
pub fn cycle_with_fan(ctx: &GContext, words: &[Word], c: &Structure, order: &[usize]) -> Structure {
    let mut d = c.clone();
    let w0 = &words[order[0]];
    for &k in &order[1..] {
        let wk = &words[k];
        if wk.len() > w0.len() {
            d.set_letter(order[0], k, ctx.letter(wk[w0.len()]));
        }
    }
    d
}

/// Identifies the vertices in `merge` (all non-adjacent, same type) into
/// the first of them. Returns the merged structure and the quotient map, or
/// `None` when two pairs collapse onto one pair with different letters.
pub fn merge_vertices(d: &Structure, merge: &[usize]) -> Option<(Structure, Vec<usize>)> {
    let keep = merge[0];
    let mut f = vec![0; d.len()];
    let mut kept = Vec::new();
    for v in 0..d.len() {
        if merge.contains(&v) && v != keep {
            continue;
        }
        f[v] = kept.len();
        kept.push(v);
    }
    for &v in merge {
        f[v] = f[keep];
    }
    let mut e = induced(d, &kept).ok()?;
    for u in 0..d.len() {
        for v in 0..d.len() {
            if u == v || !d.adjacent(u, v) {
                continue;
            }
            let (a, b) = (f[u], f[v]);
            if a == b {
                return None;
            }
            if e.adjacent(a, b) && e.letter(a, b) != d.letter(u, v) {
                return None;
            }
            e.set_letter(a, b, d.letter(u, v));
        }
    }
    Some((e, f))
}

fn check_cycle(ctx: &GContext, words: &[Word], c: &Cycle) -> Result<(bool, Option<String>)> {
    let spec = ctx.spec();
    if !cycle_has_completion(c, spec)? {
        return Ok((false, Some("cycle has no completion".into())));
    }
    let l = c.len();
    // Rotate to start at the first shortest vertex (indices into c.structure).
    let lens: Vec<usize> = c.vertices.iter().map(|&v| words[v].len()).collect();
    let min = *lens.iter().min().expect("nonempty cycle");
    let start = lens.iter().position(|&x| x == min).expect("minimum exists");
    let order: Vec<usize> = (0..l).map(|i| (start + i) % l).collect();
    let local: Vec<Word> = c.vertices.iter().map(|&v| words[v].clone()).collect();
    let d = cycle_with_fan(ctx, &local, &c.structure, &order);
    let ident: Vec<usize> = (0..l).collect();
    if !is_homomorphism_embedding(&ident, &c.structure, &d) {
        return Ok((false, Some("the fan does not extend the cycle".into())));
    }
    if !complete(&d, spec)?.is_completed() {
        return Ok((false, Some("the fan structure has no completion".into())));
    }
    let merge: Vec<usize> = (0..l).filter(|&i| lens[i] == min).collect();
    if merge.len() < 2 {
        return Ok((false, None));
    }
    let Some((e, f)) = merge_vertices(&d, &merge) else {
        return Ok((true, Some("merging the shortest vertices collapses conflicting pairs".into())));
    };
    if !is_homomorphism_embedding(&f, &d, &e) {
        return Ok((true, Some("the merge map is not a homomorphism-embedding".into())));
    }
    if induced_cycles(&e, e.len().max(3))?.iter().any(|cy| cy.len() > 3) {
        return Ok((true, Some("the merged structure is not triangulated".into())));
    }
    match complete(&e, spec)? {
        CompletionResult::Completed { .. } => Ok((true, None)),
        CompletionResult::Obstructed(o) => {
            Ok((true, Some(format!("the merged structure does not complete ({})", o.kind()))))
        }
    }
}

/// Checks every induced cycle of length `3..=lmax` in the truncation at
/// length `n`: the cycle completes, the fan from its shortest vertex
/// extends and completes it, and when several vertices share the minimum
/// length, identifying them gives a triangulated structure that completes.
pub fn g_cycle_audit(ctx: &GContext, n: usize, lmax: usize) -> Result<CycleAuditReport> {
    if lmax < 3 {
        return Err(Error::input("cycle length bound must be at least 3"));
    }
    let t = g_truncation(ctx, n)?;
    let s = &t.structure;
    let mut seqs: Vec<Vec<usize>> = Vec::new();
    let cap = caps::work_cap() as usize;
    let mut over = false;
    for_each_induced_cycle(s.len(), |u, v| s.adjacent(u, v), lmax, |seq| {
        seqs.push(seq.to_vec());
        over = seqs.len() > cap;
        !over
    });
    if over {
        return Err(Error::capacity(format!("more than {cap} induced cycles")));
    }
    let results: Vec<(usize, bool, Option<String>)> = seqs
        .par_iter()
        .map(|seq| {
            let c = Cycle { vertices: seq.clone(), structure: induced(s, seq)? };
            let (merged, failure) = check_cycle(ctx, &t.words, &c)?;
            Ok((seq.len(), merged, failure))
        })
        .collect::<Result<_>>()?;
    let mut cycles_by_length = BTreeMap::new();
    let mut failures = Vec::new();
    let mut merged_checks = 0;
    for (seq, (len, merged, failure)) in seqs.iter().zip(results) {
        *cycles_by_length.entry(len).or_insert(0) += 1;
        merged_checks += usize::from(merged);
        if let Some(reason) = failure {
            failures.push(CycleFailure { cycle: seq.iter().map(|&v| s.name(v).to_string()).collect(), reason });
        }
    }
    Ok(CycleAuditReport {
        rule: ctx.spec().rule().kind(),
        n,
        lmax,
        vertices: t.len(),
        cycles: seqs.len(),
        cycles_by_length,
        merged_checks,
        failures,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct TransportViolation {
    pub w: String,
    pub u: String,
    pub v: String,
    pub reason: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct TransportReport {
    pub rule: &'static str,
    pub checked: u64,
    pub seed: Option<u64>,
    pub prng: Option<&'static str>,
    pub violations: Vec<TransportViolation>,
}

fn render_params(w: &[usize]) -> String {
    w.iter().map(|p| format!("_{p}")).collect::<Vec<_>>().join(" ")
}

/// Checks one substitution on one pair: both images are vertices and carry
/// the same pair structure as the originals.
pub fn transport_pair(ctx: &GContext, w: &[usize], u: &[usize], v: &[usize]) -> Option<String> {
    let (wu, wv) = (apply_params(w, u), apply_params(w, v));
    if !ctx.is_vertex_unchecked(&wu) || !ctx.is_vertex_unchecked(&wv) {
        return Some("an image is not a vertex".into());
    }
    if wu == wv {
        return Some("distinct vertices have the same image".into());
    }
    let before = ctx.pair_unchecked(u, v);
    let after = ctx.pair_unchecked(&wu, &wv);
    (before != after).then(|| format!("{before:?} became {after:?}"))
}

fn params_of(w: &crate::paramwords::ParamWord) -> Result<Vec<usize>> {
    w.entries()
        .iter()
        .map(|e| match e {
            crate::paramwords::Symbol::Param(p) => Ok(*p),
            crate::paramwords::Symbol::Letter(_) => Err(Error::input("W must be an all-parameter word")),
        })
        .collect()
}

/// Checks `W` on vertex pairs of length at most `n`: all pairs when
/// `trials` is zero, otherwise `trials` random pairs.
pub fn transport_check(
    ctx: &GContext,
    w: &crate::paramwords::ParamWord,
    n: usize,
    trials: u64,
    seed: u64,
) -> Result<TransportReport> {
    let params = params_of(w)?;
    if w.params() < n {
        return Err(Error::input(format!("W has {} parameters, fewer than n = {n}", w.params())));
    }
    let verts = vertex_words(ctx, n, caps::truncation_cap())?;
    let mut violations = Vec::new();
    let mut checked = 0;
    let mut record = |u: &Word, v: &Word, reason: String| {
        violations.push(TransportViolation {
            w: render_params(&params),
            u: ctx.render(u),
            v: ctx.render(v),
            reason,
        })
    };
    if trials == 0 {
        for (i, u) in verts.iter().enumerate() {
            for v in &verts[i + 1..] {
                checked += 1;
                if let Some(r) = transport_pair(ctx, &params, u, v) {
                    record(u, v, r);
                }
            }
        }
    } else if verts.len() >= 2 {
        for t in 0..trials {
            let mut rng = trial_rng(seed, t);
            let i = rng.gen_range(0..verts.len());
            let mut j = rng.gen_range(0..verts.len() - 1);
            if j >= i {
                j += 1;
            }
            checked += 1;
            if let Some(r) = transport_pair(ctx, &params, &verts[i], &verts[j]) {
                record(&verts[i], &verts[j], r);
            }
        }
    }
    Ok(TransportReport {
        rule: ctx.spec().rule().kind(),
        checked,
        seed: (trials > 0).then_some(seed),
        prng: (trials > 0).then_some(PRNG_ID),
        violations,
    })
}

/// All restricted growth strings of length `1..=max_len` with at least
/// `min_params` distinct values: the all-parameter words over the empty
/// alphabet.
pub fn all_parameter_words(max_len: usize, min_params: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(max_len: usize, min_params: usize, opened: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if !cur.is_empty() && opened >= min_params {
            out.push(cur.clone());
        }
        if cur.len() == max_len {
            return;
        }
        for p in 0..=opened {
            cur.push(p);
            go(max_len, min_params, opened.max(p + 1), cur, out);
            cur.pop();
        }
    }
    go(max_len, min_params, 0, &mut cur, &mut out);
    out
}

/// Every all-parameter word of length at most `max_w_len` with at least
/// `n` parameters, on every pair of vertices of length at most `n`.
pub fn transport_sweep(ctx: &GContext, max_w_len: usize, n: usize) -> Result<TransportReport> {
    let verts = vertex_words(ctx, n, caps::truncation_cap())?;
    let ws = all_parameter_words(max_w_len, n);
    let results: Vec<(u64, Vec<TransportViolation>)> = ws
        .par_iter()
        .map(|w| {
            let mut checked = 0;
            let mut bad = Vec::new();
            for (i, u) in verts.iter().enumerate() {
                for v in &verts[i + 1..] {
                    checked += 1;
                    if let Some(reason) = transport_pair(ctx, w, u, v) {
                        bad.push(TransportViolation {
                            w: render_params(w),
                            u: ctx.render(u),
                            v: ctx.render(v),
                            reason,
                        });
                    }
                }
            }
            (checked, bad)
        })
        .collect();
    Ok(TransportReport {
        rule: ctx.spec().rule().kind(),
        checked: results.iter().map(|r| r.0).sum(),
        seed: None,
        prng: None,
        violations: results.into_iter().flat_map(|r| r.1).collect(),
    })
}

/// `trials` random cases: a random vertex length bound up to `max_n`, a
/// random all-parameter word with at least that many parameters and length
/// up to `max_w_len`, and two random distinct vertices.
pub fn transport_random(
    ctx: &GContext,
    trials: u64,
    seed: u64,
    max_n: usize,
    max_w_len: usize,
) -> Result<TransportReport> {
    if max_n == 0 || max_w_len < max_n {
        return Err(Error::input("need 1 <= max_n <= max_w_len"));
    }
    let types: Vec<_> = {
        let mut t: Vec<_> = ctx.sigma().iter().map(|l| l.target).collect();
        t.sort();
        t.dedup();
        t
    };
    let results: Vec<Option<TransportViolation>> = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = trial_rng(seed, trial);
            let n = rng.gen_range(1..=max_n);
            let len = rng.gen_range(n..=max_w_len);
            // Random restricted growth string with at least n parameters:
            // open a new parameter when the remaining room demands it.
            let mut w = Vec::with_capacity(len);
            let mut opened = 0;
            for pos in 0..len {
                let must_open = n.saturating_sub(opened) >= len - pos;
                let p = if must_open { opened } else { rng.gen_range(0..=opened) };
                opened = opened.max(p + 1);
                w.push(p);
            }
            let vertex = |rng: &mut rand_chacha::ChaCha8Rng| -> Word {
                let t = types[rng.gen_range(0..types.len())];
                let letters: Vec<usize> = (0..ctx.sigma().len()).filter(|&i| ctx.letter(i).target == t).collect();
                let l = rng.gen_range(1..=n);
                (0..l).map(|_| letters[rng.gen_range(0..letters.len())]).collect()
            };
            let u = vertex(&mut rng);
            let mut v = vertex(&mut rng);
            while v == u {
                v = vertex(&mut rng);
            }
            transport_pair(ctx, &w, &u, &v).map(|reason| TransportViolation {
                w: render_params(&w),
                u: ctx.render(&u),
                v: ctx.render(&v),
                reason,
            })
        })
        .collect();
    Ok(TransportReport {
        rule: ctx.spec().rule().kind(),
        checked: trials,
        seed: Some(seed),
        prng: Some(PRNG_ID),
        violations: results.into_iter().flatten().collect(),
    })
}
