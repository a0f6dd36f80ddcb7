//! Ground truth by brute force: closures under the Kashiwara operators `f_k`.

use std::collections::BTreeSet;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::cartan::Setting;
use crate::crystal::{Crystal, WeightSpec};
use crate::form::{LinearForm, ZVector};
use crate::inequality;
use crate::shapes;

/// Elements of the image at each size `0..=depth` (size = sum of entries).
pub fn generate_levels(setting: &Setting, lambda: &WeightSpec, depth: usize) -> Vec<BTreeSet<ZVector>> {
    let c = Crystal::new(setting, lambda.clone());
    let n = setting.n();
    let mut levels = vec![BTreeSet::from([ZVector::zero()])];
    for _ in 0..depth {
        let cur: Vec<&ZVector> = levels.last().unwrap().iter().collect();
        let next: BTreeSet<ZVector> = cur
            .par_iter()
            .flat_map_iter(|a| (1..=n).filter_map(|k| c.f(k, a)).collect::<Vec<_>>())
            .collect();
        levels.push(next);
    }
    levels
}

/// All elements reachable from `0` by at most `depth` operators.
pub fn generate_image(setting: &Setting, lambda: &WeightSpec, depth: usize) -> BTreeSet<ZVector> {
    generate_levels(setting, lambda, depth).into_iter().flatten().collect()
}

/// Whether `x` is reachable from `0`. Every `f_k` adds one to a single entry,
/// so any path to `x` stays componentwise below `x`.
pub fn reachable(setting: &Setting, lambda: &WeightSpec, x: &ZVector) -> bool {
    let c = Crystal::new(setting, lambda.clone());
    let mut level = BTreeSet::from([ZVector::zero()]);
    for _ in 0..x.size() {
        let mut next = BTreeSet::new();
        for a in &level {
            for k in 1..=setting.n() {
                if let Some(b) = c.f(k, a) {
                    if b.le(x) {
                        next.insert(b);
                    }
                }
            }
        }
        if next.is_empty() {
            return false;
        }
        level = next;
    }
    level.contains(x)
}

/// Smallest `m` with `x` in the image for `m Lambda_k + N sum_{j != k} Lambda_j`.
/// `N = |x|` is large enough since no `epsilon*_j` of an element of size `N`
/// exceeds `N`. Returns `None` if `x` is not reached even for `m = |x|`.
pub fn epsilon_star_oracle(setting: &Setting, x: &ZVector, k: usize) -> Option<i64> {
    let big = x.size();
    (0..=big).find(|&m| {
        let mut v = vec![big; setting.n()];
        v[k - 1] = m;
        reachable(setting, &WeightSpec::Finite(v), x)
    })
}

/// Nonnegative vectors supported in `1..=window` with entry sum at most `depth`.
pub fn candidates(window: usize, depth: i64) -> Vec<ZVector> {
    fn rec(pos: usize, window: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<ZVector>) {
        if pos > window {
            out.push(ZVector::from_flat(cur));
            return;
        }
        for a in 0..=left {
            cur.push(a);
            rec(pos + 1, window, left - a, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, window, depth, &mut Vec::new(), &mut out);
    out
}

/// The inequalities of the image inside a window: `Comb[inf]`, and
/// `Comb_k[lambda]` for every `k` when `lambda` is finite.
pub fn comb_forms(setting: &Setting, lambda: &WeightSpec, window: usize) -> Vec<LinearForm> {
    let mut all: BTreeSet<LinearForm> = shapes::comb_infinity(setting, window).forms();
    if let Some(v) = lambda.finite() {
        let parts: Vec<BTreeSet<LinearForm>> = (1..=setting.n())
            .into_par_iter()
            .map(|k| shapes::comb_lambda(setting, k, v[k - 1], window).forms())
            .collect();
        all.extend(parts.into_iter().flatten());
    }
    let mut forms: Vec<LinearForm> = all.into_iter().collect();
    forms.sort_by_key(|f| f.terms().count());
    forms
}

#[derive(Clone, Debug, Serialize)]
pub struct Mismatch {
    pub vector: Vec<i64>,
    pub in_closure: bool,
    pub feasible: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CrosscheckReport {
    pub family: String,
    pub word: Vec<usize>,
    pub lambda: String,
    pub depth: usize,
    pub window: usize,
    pub form_window: usize,
    pub forms: usize,
    pub checked: usize,
    pub closure_size: usize,
    pub feasible: usize,
    pub mismatches: Vec<Mismatch>,
    pub runtime_ms: u128,
}

/// Compares the vectors of size `<= depth` satisfying every form with the
/// closure of depth `depth`. Candidates live in `1..=depth*period`, which
/// contains the support of every element of the closure; forms are taken in
/// `1..=form_window`.
pub fn crosscheck_membership(
    setting: &Setting,
    lambda: &WeightSpec,
    depth: usize,
    form_window: usize,
) -> CrosscheckReport {
    let start = Instant::now();
    let form_window = form_window.max(depth * setting.seq.period());
    let forms = comb_forms(setting, lambda, form_window);
    let mut report = crosscheck_against(setting, lambda, depth, &forms);
    report.form_window = form_window;
    report.runtime_ms = start.elapsed().as_millis();
    report
}

/// As [`crosscheck_membership`] with the forms supplied by the caller.
pub fn crosscheck_against(
    setting: &Setting,
    lambda: &WeightSpec,
    depth: usize,
    forms: &[LinearForm],
) -> CrosscheckReport {
    let start = Instant::now();
    let window = depth * setting.seq.period();
    let closure = generate_image(setting, lambda, depth);
    let cands = candidates(window, depth as i64);
    let verdicts: Vec<bool> = cands
        .par_iter()
        .map(|a| inequality::membership(a, forms).is_none())
        .collect();
    let mut mismatches = Vec::new();
    let mut feasible = 0;
    for (a, ok) in cands.iter().zip(&verdicts) {
        if *ok {
            feasible += 1;
        }
        let inside = closure.contains(a);
        if inside != *ok {
            mismatches.push(Mismatch {
                vector: a.to_flat(),
                in_closure: inside,
                feasible: *ok,
            });
        }
    }
    for a in &closure {
        if a.max_pos() > window {
            mismatches.push(Mismatch {
                vector: a.to_flat(),
                in_closure: true,
                feasible: inequality::membership(a, forms).is_none(),
            });
        }
    }
    CrosscheckReport {
        family: setting.ty.name(),
        word: setting.seq.word().to_vec(),
        lambda: lambda.label(),
        depth,
        window,
        form_window: forms.iter().map(LinearForm::max_pos).max().unwrap_or(0),
        forms: forms.len(),
        checked: cands.len(),
        closure_size: closure.len(),
        feasible,
        mismatches,
        runtime_ms: start.elapsed().as_millis(),
    }
}

/// `epsilon*_k` from the closed forms `Comb_k[0]`, taken in a window that
/// extends `margin` periods past the support of `x`.
pub fn epsilon_star_from_forms(setting: &Setting, x: &ZVector, k: usize, margin: usize) -> Option<i64> {
    let period = setting.seq.period();
    let window = (x.max_pos().div_ceil(period) + margin) * period;
    let set = shapes::comb_lambda(setting, k, 0, window);
    inequality::epsilon_star_forms(x, set.entries.iter().map(|(_, f)| f))
}
