//! Prints one PASS/FAIL line per acceptance criterion and exits nonzero if any
//! failed. Runs without the libtest harness so the lines are never captured.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rand::{seq::SliceRandom, SeedableRng};

use crystal_poly::inequality::{
    beta_minus, beta_sk, check_ample, check_positivity, check_strict_positivity, s_hat, s_prime,
    xi_infinity, xi_lambda, xi_lambda_k, xi_star_k,
};
use crystal_poly::oracle::{
    comb_forms, crosscheck_against, epsilon_star_from_forms, epsilon_star_oracle, generate_image,
    generate_levels,
};
use crystal_poly::shapes::{
    comb_case, comb_infinity, comb_lambda, CombCase, CornerKind, Eyd, PointKind, Reyd, Shape, Source, Wall,
};
use crystal_poly::{AffineType, Crystal, Family, LinearForm, Setting, WeightSpec, ZVector};

type Outcome = Result<String, String>;
/// `(coeff, s, k)` triples standing for `coeff * x_{s,k}`.
type Terms = &'static [(i64, i64, usize)];
type Pairs = &'static [(i64, i64)];
type Criterion = (&'static str, fn() -> Outcome, Duration);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn setting(family: Family, n: usize, word: &[usize]) -> Setting {
    Setting::new(AffineType::new(family, n).unwrap(), word.to_vec()).unwrap()
}

/// `c + sum coeff * x_{s,k}` from `(coeff, s, k)` triples.
fn lin(st: &Setting, c: i64, terms: &[(i64, i64, usize)]) -> LinearForm {
    let mut f = LinearForm::constant_form(c);
    for &(m, s, k) in terms {
        f.add_scaled(&st.x(s, k), m);
    }
    f
}

/// The grid of criteria 5 and 6: every family at rank 3, two adapted words each.
fn grid() -> Vec<Setting> {
    let mut out = Vec::new();
    for (family, words) in [
        (Family::A1, [[2, 1, 3], [3, 1, 2]]),
        (Family::C1, [[2, 1, 3], [1, 2, 3]]),
        (Family::A2, [[2, 1, 3], [1, 2, 3]]),
        (Family::D2, [[2, 1, 3], [1, 2, 3]]),
    ] {
        for w in words {
            out.push(setting(family, 3, &w));
        }
    }
    out
}

fn weights() -> [Vec<i64>; 2] {
    [vec![1, 0, 0], vec![1, 1, 0]]
}

fn criterion_1() -> Outcome {
    let st = setting(Family::A1, 3, &[2, 1, 3]);
    let window = 18;

    let inf = comb_infinity(&st, window).forms();
    // Shapes of offset `s` listed per charge, as (coeff, ds, k) with x_{s+ds,k}.
    let listed: [&[(i64, i64, usize)]; 18] = [
        &[(1, 0, 1)],
        &[(1, 1, 2), (1, 0, 3), (-1, 1, 1)],
        &[(1, 1, 3), (1, 0, 3), (-1, 2, 2)],
        &[(2, 1, 2), (-1, 1, 3)],
        &[(1, 1, 2), (1, 1, 1), (-1, 2, 2)],
        &[(1, 1, 2), (1, 1, 3), (-1, 2, 1)],
        &[(1, 0, 2)],
        &[(1, 0, 1), (1, 0, 3), (-1, 1, 2)],
        &[(1, 0, 1), (1, 1, 1), (-1, 1, 3)],
        &[(2, 0, 3), (-1, 1, 1)],
        &[(1, 0, 3), (1, 1, 2), (-1, 1, 3)],
        &[(1, 0, 3), (1, 1, 1), (-1, 2, 2)],
        &[(1, 0, 3)],
        &[(1, 1, 1), (1, 1, 2), (-1, 1, 3)],
        &[(1, 2, 2), (1, 1, 2), (-1, 2, 1)],
        &[(2, 1, 1), (-1, 2, 2)],
        &[(1, 1, 1), (1, 1, 3), (-1, 2, 1)],
        &[(1, 1, 1), (1, 2, 2), (-1, 2, 3)],
    ];
    let mut checked = 0;
    for s in 1..=3 {
        for terms in listed {
            let t: Vec<(i64, i64, usize)> = terms.iter().map(|&(c, d, k)| (c, s + d, k)).collect();
            let f = lin(&st, 0, &t);
            ensure(inf.contains(&f), || format!("Comb[inf] lacks {}", f.display_with(&st)))?;
            checked += 1;
        }
    }

    let h = [2, 5, 7];
    ensure(comb_case(&st, 2) == CombCase::Singleton, || "k=2 is not a singleton".into())?;
    let c2 = comb_lambda(&st, 2, h[1], window).forms();
    ensure(c2 == BTreeSet::from([lin(&st, h[1], &[(-1, 1, 2)])]), || "Comb_2 differs".into())?;

    ensure(comb_case(&st, 1) == CombCase::Ladder, || "k=1 is not a ladder".into())?;
    let c1 = comb_lambda(&st, 1, h[0], window);
    let ladder: Vec<LinearForm> = c1
        .entries
        .iter()
        .filter(|(src, _)| matches!(src, Source::Ladder { r, .. } if *r <= 6))
        .map(|(_, f)| f.clone())
        .collect();
    let expected: Vec<LinearForm> = [
        [(1, 1, 2), (-1, 1, 1)],
        [(1, 1, 3), (-1, 2, 2)],
        [(1, 2, 1), (-1, 2, 3)],
        [(1, 3, 2), (-1, 3, 1)],
        [(1, 3, 3), (-1, 4, 2)],
    ]
    .iter()
    .map(|t| lin(&st, h[0], t))
    .collect();
    ensure(ladder == expected, || "ladder r=2..6 differs".into())?;

    ensure(comb_case(&st, 3) == CombCase::Shapes, || "k=3 is not given by diagrams".into())?;
    let c3 = comb_lambda(&st, 3, h[2], window).forms();
    let diagrams: [(&[i64], Terms); 5] = [
        (&[2], &[(1, 1, 1), (1, 1, 2), (-1, 1, 3)]),
        (&[2, 2], &[(1, 2, 2), (1, 1, 2), (-1, 2, 1)]),
        (&[1], &[(2, 1, 1), (-1, 2, 2)]),
        (&[1, 2], &[(1, 1, 1), (1, 1, 3), (-1, 2, 1)]),
        (&[1, 1], &[(1, 1, 1), (1, 2, 2), (-1, 2, 3)]),
    ];
    for (ys, terms) in diagrams {
        let t = Eyd::from_values(3, ys).unwrap();
        let got = t.form(&st, 0);
        let want = lin(&st, 0, terms);
        ensure(got == want, || format!("L({t}) = {}", got.display_with(&st)))?;
        ensure(c3.contains(&want.with_constant(h[2])), || format!("Comb_3 lacks {t}"))?;
    }
    Ok(format!("{checked} Comb[inf] forms, ladder, singleton, 5 diagrams"))
}

fn criterion_2() -> Outcome {
    let st = setting(Family::A2, 3, &[2, 1, 3]);
    let p = |k: usize, ts: std::ops::RangeInclusive<i64>| -> Vec<i64> {
        ts.map(|t| st.big_p(k, t).unwrap()).collect()
    };
    ensure(p(1, 1..=4) == [0, 1, 1, 2], || "P_1 table".into())?;
    ensure(p(2, -1..=4) == [1, 0, 0, 0, 0, 1], || "P_2 table".into())?;
    ensure(p(3, 1..=5) == [1, 1, 0, 1, 1], || "P_3 table".into())?;

    let walls: [(&[u32], Terms); 4] = [
        (&[2], &[(1, 1, 2), (-1, 1, 1)]),
        (&[4], &[(1, 1, 3), (1, 1, 1), (-1, 2, 2)]),
        (&[4, 2], &[(1, 1, 3), (-1, 2, 1)]),
        (&[6], &[(1, 2, 2), (1, 1, 1), (-1, 2, 3)]),
    ];
    let c1 = comb_lambda(&st, 1, 0, 12).forms();
    for (hs, terms) in walls {
        let y = Wall::from_heights(Family::A2, 3, 1, hs).unwrap();
        let got = y.form(&st, 0);
        ensure(got == lin(&st, 0, terms), || format!("L({y}) = {}", got.display_with(&st)))?;
        ensure(c1.contains(&got), || format!("Comb_1 lacks {y}"))?;
    }

    let diagrams: [(Pairs, Terms, Pairs); 4] = [
        (&[(0, 2)], &[(2, 1, 2), (-1, 1, 3)], &[]),
        (&[(-1, 1), (0, 2)], &[(2, 1, 1), (1, 1, 2), (-1, 2, 2)], &[(-2, 1)]),
        (&[(-1, 1), (0, 2), (1, 2)], &[(4, 1, 1), (1, 1, 3), (-2, 2, 2)], &[(-2, 1), (2, 3)]),
        (&[(-1, 1), (0, 1), (1, 2)], &[(4, 1, 1), (-1, 2, 3)], &[(-2, 1), (2, 3)]),
    ];
    let c3 = comb_lambda(&st, 3, 0, 12).forms();
    for (vals, terms, doubles) in diagrams {
        let t = Reyd::from_values(Family::A2, 3, 3, vals).unwrap();
        let got = t.form(&st, 0);
        ensure(got == lin(&st, 0, terms), || format!("L({t}) = {}", got.display_with(&st)))?;
        ensure(c3.contains(&got), || format!("Comb_3 lacks {t}"))?;
        let dbl: Vec<(i64, i64)> = t
            .points()
            .iter()
            .filter(|q| q.double && q.kind == PointKind::Admissible && q.color == 1)
            .map(|q| (q.i, q.j))
            .collect();
        ensure(dbl == doubles, || format!("double points of {t}: {dbl:?}"))?;
    }
    let c2 = comb_lambda(&st, 2, 0, 12).forms();
    ensure(c2 == BTreeSet::from([lin(&st, 0, &[(-1, 1, 2)])]), || "Comb_2 differs".into())?;
    Ok("P tables, 4 walls, 4 revised diagrams".into())
}

fn criterion_3() -> Outcome {
    let t = Eyd::from_values(1, &[-3, -2, -1, -1, 0, 1]).unwrap();
    let corners = |kind| -> Vec<(i64, i64)> {
        t.corners().into_iter().filter(|c| c.kind == kind).map(|c| (c.i, c.j)).collect()
    };
    ensure(corners(CornerKind::Convex) == [(1, -3), (2, -2), (4, -1), (5, 0)], || "convex".into())?;
    ensure(
        corners(CornerKind::Concave) == [(0, -3), (1, -2), (2, -1), (4, 0), (5, 1)],
        || "concave".into(),
    )?;

    let mut vals = vec![(-2, 0), (-1, -2), (0, -2), (1, -2), (2, -1), (3, -1)];
    vals.extend((4..=7).map(|t| (t, 1)));
    let r = Reyd::from_values(Family::A2, 3, 2, &vals).unwrap();
    let pick = |kind: PointKind, double: bool| -> Vec<(i64, i64, usize)> {
        r.points()
            .into_iter()
            .filter(|p| p.kind == kind && p.double == double)
            .map(|p| (p.i, p.j, p.color))
            .collect()
    };
    ensure(
        pick(PointKind::Admissible, false) == [(-2, 0, 1), (-1, -2, 1), (2, -1, 2), (4, 1, 1)],
        || format!("single admissible {:?}", pick(PointKind::Admissible, false)),
    )?;
    ensure(pick(PointKind::Admissible, true) == [(8, 2, 1)], || "double admissible".into())?;
    ensure(
        pick(PointKind::Removable, false) == [(2, -2, 3), (4, -1, 1), (8, 1, 2)],
        || format!("single removable {:?}", pick(PointKind::Removable, false)),
    )?;
    ensure(pick(PointKind::Removable, true).is_empty(), || "double removable".into())?;

    let y = Wall::from_heights(Family::A2, 3, 1, &[8, 4, 2]).unwrap();
    let sites = y.sites();
    let adm: Vec<_> = sites.iter().filter(|s| !s.removable).map(|s| (s.column, s.color, s.double)).collect();
    let rem: Vec<_> = sites.iter().filter(|s| s.removable).map(|s| (s.column, s.color, s.double)).collect();
    let mut adm_sorted = adm.clone();
    adm_sorted.sort();
    let mut rem_sorted = rem.clone();
    rem_sorted.sort();
    ensure(adm_sorted == [(0, 1, true), (1, 3, false)], || format!("slots {adm:?}"))?;
    ensure(rem_sorted == [(0, 2, false), (2, 1, false)], || format!("removable blocks {rem:?}"))?;
    Ok("corners, 8 points, 4 wall sites".into())
}

fn criterion_4() -> Outcome {
    let st = setting(Family::A1, 3, &[2, 1, 3]);
    let c = Crystal::infinity(&st);
    let star = [3, 1, 1, 2, 2, 2, 3, 3, 1, 1, 1, 2, 2, 2];
    let xs = c.apply_word(&star, &ZVector::zero()).map(|v| v.to_flat());
    ensure(xs.as_deref() == Some(&[1, 1, 1, 2, 2, 1, 1, 1, 1, 1, 1, 0, 1][..]), || format!("star word gives {xs:?}"))?;
    let x = ZVector::from_flat(&[3, 3, 2, 3, 2, 1]);
    let by_forms: Vec<Option<i64>> = (1..=3).map(|k| epsilon_star_from_forms(&st, &x, k, 1)).collect();
    ensure(by_forms == [Some(1), Some(3), Some(0)], || format!("forms give {by_forms:?}"))?;
    let by_oracle: Vec<Option<i64>> = (1..=3).map(|k| epsilon_star_oracle(&st, &x, k)).collect();
    ensure(by_oracle == by_forms, || format!("oracle gives {by_oracle:?}"))?;

    let mut rng = rand::rngs::StdRng::seed_from_u64(2024);
    let mut compared = 0;
    for family in [Family::A1, Family::A2, Family::C1, Family::D2] {
        let st = setting(family, 3, &[2, 1, 3]);
        let image: Vec<ZVector> = generate_image(&st, &WeightSpec::Infinity, 6).into_iter().collect();
        for x in image.choose_multiple(&mut rng, 200) {
            for k in 1..=3 {
                let a = epsilon_star_from_forms(&st, x, k, 1);
                let b = epsilon_star_oracle(&st, x, k);
                ensure(a.is_some() && a == b, || format!("{family} {x} k={k}: forms {a:?}, oracle {b:?}"))?;
                compared += 1;
            }
        }
    }
    Ok(format!("(1,3,0) and {compared} random comparisons"))
}

fn criterion_5() -> Outcome {
    let depth = 5;
    let mut runs = 0;
    let mut checked = 0;
    for st in grid() {
        let window = depth * st.seq.period();
        let mut lams: Vec<WeightSpec> = weights().into_iter().map(WeightSpec::Finite).collect();
        lams.push(WeightSpec::Infinity);
        for lam in lams {
            let forms = comb_forms(&st, &lam, window);
            let report = crosscheck_against(&st, &lam, depth, &forms);
            ensure(report.mismatches.is_empty(), || {
                format!(
                    "{} {:?} {}: {} mismatches, first {:?}",
                    report.family,
                    report.word,
                    report.lambda,
                    report.mismatches.len(),
                    report.mismatches[0]
                )
            })?;
            runs += 1;
            checked += report.checked;
        }
    }
    Ok(format!("{runs} runs, {checked} candidate vectors, no mismatch"))
}

fn criterion_6() -> Outcome {
    let window = 12;
    let mut compared = 0;
    for st in grid() {
        for lam in weights() {
            for k in 1..=3 {
                let closure = xi_lambda_k(&st, &lam, k, window);
                ensure(closure.converged, || "closure did not converge".into())?;
                let mut comb = comb_lambda(&st, k, lam[k - 1], window).forms();
                comb.insert(LinearForm::zero());
                ensure(closure.forms == comb, || {
                    format!(
                        "{} {:?} k={k}: closure {} forms, Comb {} forms",
                        st.ty.name(),
                        st.seq.word(),
                        closure.forms.len(),
                        comb.len()
                    )
                })?;
                compared += comb.len();
            }
        }
        let closure = xi_infinity(&st, window);
        let comb = comb_infinity(&st, window).forms();
        ensure(closure.forms == comb, || format!("{} {:?}: Comb[inf]", st.ty.name(), st.seq.word()))?;
        compared += comb.len();
    }
    Ok(format!("{compared} forms equal within window {window}"))
}

fn crystal_axioms(st: &Setting, lam: &WeightSpec, depth: usize) -> Result<usize, String> {
    let c = Crystal::new(st, lam.clone());
    let levels = generate_levels(st, lam, depth);
    let all: BTreeSet<&ZVector> = levels.iter().flatten().collect();
    let mut n = 0;
    for b in &all {
        let raisable = (1..=st.n()).any(|k| c.e(k, b).is_some());
        ensure(b.is_zero() != raisable, || format!("{b} is a second highest weight element"))?;
        for k in 1..=st.n() {
            let w = c.wt(b);
            ensure(c.phi(k, b) == c.epsilon(k, b) + c.pair(k, &w), || format!("phi at {b}"))?;
            if let Some(b2) = c.f(k, b) {
                ensure(c.e(k, &b2).as_ref() == Some(*b), || format!("e f != id at {b}"))?;
                ensure(c.epsilon(k, &b2) == c.epsilon(k, b) + 1, || format!("eps at {b}"))?;
                ensure(c.phi(k, &b2) == c.phi(k, b) - 1, || format!("phi step at {b}"))?;
                let w2 = c.wt(&b2);
                ensure(c.pair(k, &w2) == c.pair(k, &w) - 2, || format!("wt at {b}"))?;
            }
            if let Some(b0) = c.e(k, b) {
                ensure(c.f(k, &b0).as_ref() == Some(*b), || format!("f e != id at {b}"))?;
                ensure(all.contains(&b0), || format!("closure not e-saturated at {b}"))?;
            }
            // String lengths: epsilon counts e steps, and phi counts f steps in B(lambda).
            let mut m = 0;
            let mut cur = (*b).clone();
            while let Some(nx) = c.e(k, &cur) {
                cur = nx;
                m += 1;
            }
            ensure(m == c.epsilon(k, b), || format!("e-string at {b}"))?;
            if lam.finite().is_some() {
                let mut m = 0;
                let mut cur = (*b).clone();
                while let Some(nx) = c.f(k, &cur) {
                    cur = nx;
                    m += 1;
                }
                ensure(m == c.phi(k, b), || format!("f-string at {b}"))?;
            }
            n += 1;
        }
    }
    Ok(n)
}

fn shape_moves(st: &Setting, rng: &mut rand::rngs::StdRng, wanted: usize) -> Result<usize, String> {
    let mut done = 0;
    let mut tries = 0;
    while done < wanted {
        tries += 1;
        ensure(tries < 100 * wanted, || "too few usable moves".into())?;
        let k = rand::Rng::gen_range(rng, 1..=st.n());
        let mut sh = Shape::empty(st, k);
        for _ in 0..rand::Rng::gen_range(rng, 0..8) {
            let kids = sh.children();
            sh = kids.choose(rng).unwrap().clone();
        }
        let s = rand::Rng::gen_range(rng, 1..4);
        let before = sh.form(st, s);
        let kids = sh.children();
        let next = kids.choose(rng).unwrap();
        let diff = before.minus(&next.form(st, s));
        // The variable the move is charged to is the one whose beta the form lost.
        let found = (1..=(before.max_pos().max(next.form(st, s).max_pos()) as i64))
            .flat_map(|a| (1..=st.n()).map(move |t| (a, t)))
            .any(|(a, t)| beta_sk(st, a, t) == diff);
        ensure(found, || format!("{sh} -> {next}: difference is not a beta"))?;
        let index_ok = match (&sh, next) {
            (Shape::Eyd(t), Shape::Eyd(u)) => t.corners().iter().any(|c| {
                c.kind == CornerKind::Concave && t.add_box(c.i).as_ref() == Some(u) && {
                    let (a, col) = t.corner_index(st, s, c.i, c.j);
                    beta_sk(st, a, col) == diff
                }
            }),
            (Shape::Reyd(t), Shape::Reyd(u)) => t.points().iter().any(|p| {
                p.kind == PointKind::Admissible && t.lower(p.i).as_ref() == Some(u) && {
                    let (a, col) = t.point_index(st, s, p);
                    beta_sk(st, a, col) == diff
                }
            }),
            (Shape::Wall(y), Shape::Wall(u)) => y.sites().iter().any(|p| {
                !p.removable && y.add_block(p.column).as_ref() == Some(u) && {
                    let (a, col) = y.site_index(st, s, p);
                    beta_sk(st, a, col) == diff
                }
            }),
            _ => false,
        };
        ensure(index_ok, || format!("{sh} -> {next}: index formula"))?;
        done += 1;
    }
    Ok(done)
}

fn criterion_7() -> Outcome {
    let mut axioms = 0;
    let mut moves = 0;
    let mut rng = rand::rngs::StdRng::seed_from_u64(7);
    for st in grid() {
        let mut lams: Vec<WeightSpec> = weights().into_iter().map(WeightSpec::Finite).collect();
        lams.push(WeightSpec::Infinity);
        for lam in &lams {
            axioms += crystal_axioms(&st, lam, 5)?;
        }
        moves += shape_moves(&st, &mut rng, 500)?;

        let window = 12;
        let xi = xi_infinity(&st, window).forms;
        ensure(check_positivity(&st, &xi), || format!("positivity fails for {}", st.ty.name()))?;
        let stars: Vec<BTreeSet<LinearForm>> = (1..=st.n()).map(|k| xi_star_k(&st, k, window).forms).collect();
        ensure(check_strict_positivity(&st, &xi, &stars), || {
            format!("strict positivity fails for {}", st.ty.name())
        })?;
        for lam in weights() {
            let forms = xi_lambda(&st, &lam, window).forms;
            ensure(check_ample(&forms), || format!("{} {:?} not ample", st.ty.name(), lam))?;
        }
    }

    let mut relations = 0;
    for st in grid() {
        for _ in 0..200 {
            let c = rand::Rng::gen_range(&mut rng, -3..4);
            let terms: Vec<(usize, i64)> = (0..rand::Rng::gen_range(&mut rng, 1..6))
                .map(|_| (rand::Rng::gen_range(&mut rng, 1..=12), rand::Rng::gen_range(&mut rng, -2..3)))
                .collect();
            let phi = LinearForm::from_terms(c, &terms);
            let lam: Vec<i64> = (0..3).map(|_| rand::Rng::gen_range(&mut rng, 0..4)).collect();
            let r = rand::Rng::gen_range(&mut rng, 1..=12);
            let hat = s_hat(&st, r, &phi, &lam);
            if phi.coeff(r) < 0 && st.seq.prev_same(r) == 0 {
                ensure(hat == phi.plus(&beta_minus(&st, r, &lam)), || "first occurrence".into())?;
            } else {
                let plain = s_prime(&st, r, &phi.with_constant(0));
                ensure(hat == plain.with_constant(c), || format!("relation fails for {}", phi.display_with(&st)))?;
            }
            relations += 1;
        }
    }
    Ok(format!(
        "{axioms} axiom checks, {moves} shape moves, {relations} rewriting checks, positivity, ampleness"
    ))
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("worked example, untwisted rank 3", criterion_1, Duration::from_secs(10)),
        ("worked example, twisted rank 3", criterion_2, Duration::from_secs(60)),
        ("corner, point and slot calculus", criterion_3, Duration::from_secs(60)),
        ("epsilon* by forms vs oracle", criterion_4, Duration::from_secs(300)),
        ("image equals form-feasible set", criterion_5, Duration::from_secs(600)),
        ("rewriting closure equals Comb", criterion_6, Duration::from_secs(600)),
        ("property suites", criterion_7, Duration::from_secs(600)),
    ];
    let mut failed = Vec::new();
    for (i, (name, run, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let out = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(format!("panicked: {msg}"))
        });
        let took = start.elapsed();
        let out = match out {
            Ok(_) if took > limit => Err(format!("took {took:.1?}, limit {limit:?}")),
            o => o,
        };
        match &out {
            Ok(d) => println!("criterion {}: PASS  {name}: {d} [{took:.2?}]", i + 1),
            Err(e) => {
                println!("criterion {}: FAIL  {name}: {e} [{took:.2?}]", i + 1);
                failed.push(i + 1);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
