//! The rewriting operators `S'` and `S^'` on linear forms, the closures they
//! generate inside a window, and the checks built on those closures.

use std::collections::{BTreeSet, HashSet};

use rayon::prelude::*;

use crate::cartan::Setting;
use crate::error::{Error, Result};
use crate::form::{LinearForm, ZVector};

pub const DEFAULT_CAP: usize = 1_000_000;

/// `beta_r = x_r + sum_{r<j<r+} a_{i_r,i_j} x_j + x_{r+}`; `beta_0 = 0`.
pub fn beta(setting: &Setting, r: usize) -> LinearForm {
    if r == 0 {
        return LinearForm::zero();
    }
    let seq = &setting.seq;
    let ir = seq.color(r);
    let rp = seq.next_same(r);
    let mut f = LinearForm::var(r);
    for j in (r + 1)..rp {
        f.add_term(j, setting.cartan.get(ir, seq.color(j)));
    }
    f.add_term(rp, 1);
    f
}

/// `beta_{s,k}` through the pair dictionary.
pub fn beta_sk(setting: &Setting, s: i64, k: usize) -> LinearForm {
    let mut f = setting.x(s, k);
    f.add_scaled(&setting.x(s + 1, k), 1);
    for j in 1..=setting.n() {
        if setting.cartan.coupled(k, j) {
            f.add_scaled(&setting.x(s + setting.p.get(j, k), j), setting.cartan.get(k, j));
        }
    }
    f
}

/// `beta_r^(-)`: `beta_{r-}` when `r-` exists, otherwise the constant-bearing
/// form `-<h_{i_r}, lambda> + sum_{j<r} a_{i_r,i_j} x_j + x_r`.
pub fn beta_minus(setting: &Setting, r: usize, lambda: &[i64]) -> LinearForm {
    let seq = &setting.seq;
    let rm = seq.prev_same(r);
    if rm > 0 {
        return beta(setting, rm);
    }
    let ir = seq.color(r);
    let mut f = LinearForm::constant_form(-lambda[ir - 1]);
    for j in 1..r {
        f.add_term(j, setting.cartan.get(ir, seq.color(j)));
    }
    f.add_term(r, 1);
    f
}

pub fn s_prime(setting: &Setting, r: usize, phi: &LinearForm) -> LinearForm {
    let c = phi.coeff(r);
    if c > 0 {
        phi.minus(&beta(setting, r))
    } else if c < 0 {
        phi.plus(&beta(setting, setting.seq.prev_same(r)))
    } else {
        phi.clone()
    }
}

pub fn s_hat(setting: &Setting, r: usize, phi: &LinearForm, lambda: &[i64]) -> LinearForm {
    let c = phi.coeff(r);
    if c > 0 {
        phi.minus(&beta(setting, r))
    } else if c < 0 {
        phi.plus(&beta_minus(setting, r, lambda))
    } else {
        phi.clone()
    }
}

/// `lambda^(k) = <h_k,lambda> - sum_{j<iota^(k)} a_{k,i_j} x_j - x_{iota^(k)}`.
pub fn lambda_k(setting: &Setting, lambda: &[i64], k: usize) -> LinearForm {
    let seq = &setting.seq;
    let first = seq.first(k);
    let mut f = LinearForm::constant_form(lambda[k - 1]);
    for j in 1..first {
        f.add_term(j, -setting.cartan.get(k, seq.color(j)));
    }
    f.add_term(first, -1);
    f
}

/// `xi^(k) = lambda^(k) - <h_k, lambda>`.
pub fn xi_k(setting: &Setting, k: usize) -> LinearForm {
    lambda_k(setting, &vec![0; setting.n()], k)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Operator {
    SPrime,
    SHat(Vec<i64>),
}

impl Operator {
    pub fn apply(&self, setting: &Setting, r: usize, phi: &LinearForm) -> LinearForm {
        match self {
            Operator::SPrime => s_prime(setting, r, phi),
            Operator::SHat(l) => s_hat(setting, r, phi, l),
        }
    }
}

/// Result of a windowed closure computation.
#[derive(Clone, Debug)]
pub struct Closure {
    pub forms: BTreeSet<LinearForm>,
    /// Number of generated forms discarded because they leave the window.
    pub pruned: usize,
    pub visits: usize,
    pub converged: bool,
}

/// Breadth-first closure of `seeds` under the operator at every position of
/// the support, keeping only forms whose support lies in `1..=window`.
pub fn generate(
    setting: &Setting,
    seeds: &[LinearForm],
    op: &Operator,
    window: usize,
    cap: usize,
) -> Closure {
    let mut seen: HashSet<LinearForm> = HashSet::new();
    let mut frontier: Vec<LinearForm> = Vec::new();
    for s in seeds {
        if s.max_pos() <= window && seen.insert(s.clone()) {
            frontier.push(s.clone());
        }
    }
    let mut pruned = 0;
    let mut visits = 0;
    let mut converged = true;
    while !frontier.is_empty() {
        visits += frontier.len();
        if visits > cap {
            converged = false;
            break;
        }
        let next: Vec<Vec<LinearForm>> = frontier
            .par_iter()
            .map(|phi| {
                phi.terms()
                    .map(|(r, _)| op.apply(setting, r, phi))
                    .filter(|psi| psi != phi)
                    .collect()
            })
            .collect();
        let mut fresh = Vec::new();
        for psi in next.into_iter().flatten() {
            if psi.max_pos() > window {
                pruned += 1;
            } else if !seen.contains(&psi) {
                seen.insert(psi.clone());
                fresh.push(psi);
            }
        }
        fresh.sort();
        frontier = fresh;
    }
    Closure {
        forms: seen.into_iter().collect(),
        pruned,
        visits,
        converged,
    }
}

/// Returns an error instead of a partial result when the cap is hit.
pub fn generate_checked(
    setting: &Setting,
    seeds: &[LinearForm],
    op: &Operator,
    window: usize,
    cap: usize,
) -> Result<Closure> {
    let c = generate(setting, seeds, op, window, cap);
    if c.converged {
        Ok(c)
    } else {
        Err(Error::NoConvergence { cap })
    }
}

/// `Xi'_iota` inside the window: closure of all `x_j` with `j <= window`.
pub fn xi_infinity(setting: &Setting, window: usize) -> Closure {
    let seeds: Vec<LinearForm> = (1..=window).map(LinearForm::var).collect();
    generate(setting, &seeds, &Operator::SPrime, window, DEFAULT_CAP)
}

/// The `S^'` closure of `lambda^(k)` alone.
pub fn xi_lambda_k(setting: &Setting, lambda: &[i64], k: usize, window: usize) -> Closure {
    let seeds = vec![lambda_k(setting, lambda, k)];
    generate(setting, &seeds, &Operator::SHat(lambda.to_vec()), window, DEFAULT_CAP)
}

/// `Xi'_iota[lambda]`: the `S^'` closure of every `x_j` and every `lambda^(k)`.
pub fn xi_lambda(setting: &Setting, lambda: &[i64], window: usize) -> Closure {
    let mut seeds: Vec<LinearForm> = (1..=window).map(LinearForm::var).collect();
    seeds.extend((1..=setting.n()).map(|k| lambda_k(setting, lambda, k)));
    generate(setting, &seeds, &Operator::SHat(lambda.to_vec()), window, DEFAULT_CAP)
}

/// `Xi'^(k)_iota`: the `S'` closure of `xi^(k)`.
pub fn xi_star_k(setting: &Setting, k: usize, window: usize) -> Closure {
    let seeds = vec![xi_k(setting, k)];
    generate(setting, &seeds, &Operator::SPrime, window, DEFAULT_CAP)
}

/// First form with a negative coefficient at some `(1,k)`, if any.
pub fn positivity_violation<'f>(
    setting: &Setting,
    forms: impl IntoIterator<Item = &'f LinearForm>,
) -> Option<(&'f LinearForm, usize)> {
    let firsts: Vec<usize> = (1..=setting.n()).map(|k| setting.seq.first(k)).collect();
    forms.into_iter().find_map(|phi| {
        firsts
            .iter()
            .find(|&&r| phi.coeff(r) < 0)
            .map(|&r| (phi, r))
    })
}

pub fn check_positivity<'f>(
    setting: &Setting,
    forms: impl IntoIterator<Item = &'f LinearForm>,
) -> bool {
    positivity_violation(setting, forms).is_none()
}

/// Positivity of `Xi'` together with positivity of each `Xi'^(k)` minus
/// `xi^(k)` itself.
pub fn check_strict_positivity(
    setting: &Setting,
    xi: &BTreeSet<LinearForm>,
    xi_star: &[BTreeSet<LinearForm>],
) -> bool {
    if !check_positivity(setting, xi) {
        return false;
    }
    xi_star.iter().enumerate().all(|(idx, set)| {
        let seed = xi_k(setting, idx + 1);
        check_positivity(setting, set.iter().filter(|f| **f != seed))
    })
}

/// `phi(0) >= 0` for every form.
pub fn check_ample<'f>(forms: impl IntoIterator<Item = &'f LinearForm>) -> bool {
    forms.into_iter().all(|f| f.constant() >= 0)
}

/// `None` when every form is nonnegative on `a`, else the first violated form.
pub fn membership<'f>(
    a: &ZVector,
    forms: impl IntoIterator<Item = &'f LinearForm>,
) -> Option<&'f LinearForm> {
    forms.into_iter().find(|f| f.eval(a) < 0)
}

/// `max { -phi(x) }` over the given forms.
pub fn epsilon_star_forms<'f>(
    x: &ZVector,
    forms: impl IntoIterator<Item = &'f LinearForm>,
) -> Option<i64> {
    forms.into_iter().map(|f| -f.eval(x)).max()
}

/// Window in positions for `periods` repetitions of the word.
pub fn window_positions(setting: &Setting, periods: usize) -> usize {
    periods * setting.seq.period()
}
