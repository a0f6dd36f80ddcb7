//! Extended Young diagrams, revised diagrams and Young walls, their linear
//! functions, the ladder functions, and the assembled `Comb` sets.

pub mod eyd;
pub mod reyd;
pub mod wall;

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

pub use eyd::{Corner, CornerKind, Eyd};
pub use reyd::{Point, PointKind, Reyd};
pub use wall::{Site, Wall};

use crate::cartan::{ShapeClass, Setting};
use crate::form::LinearForm;

/// Upper bound on shapes visited by one enumeration.
pub const SHAPE_CAP: usize = 2_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Shape {
    Eyd(Eyd),
    Reyd(Reyd),
    Wall(Wall),
}

impl Shape {
    /// The shape without boxes for charge `k`.
    pub fn empty(setting: &Setting, k: usize) -> Shape {
        let (x, n) = (setting.label(), setting.n());
        match setting.class(k) {
            ShapeClass::Eyd => Shape::Eyd(Eyd::empty(k)),
            ShapeClass::Reyd => Shape::Reyd(Reyd::empty(x, n, k).expect("charge checked by class")),
            ShapeClass::Wall => Shape::Wall(Wall::ground(x, n, k).expect("charge checked by class")),
        }
    }

    pub fn form(&self, setting: &Setting, s: i64) -> LinearForm {
        match self {
            Shape::Eyd(t) => t.form(setting, s),
            Shape::Reyd(t) => t.form(setting, s),
            Shape::Wall(y) => y.form(setting, s),
        }
    }

    /// All shapes obtained by adding one box or block.
    pub fn children(&self) -> Vec<Shape> {
        match self {
            Shape::Eyd(t) => t.children().into_iter().map(Shape::Eyd).collect(),
            Shape::Reyd(t) => t.children().into_iter().map(Shape::Reyd).collect(),
            Shape::Wall(y) => y.children().into_iter().map(Shape::Wall).collect(),
        }
    }

    /// Boxes (half blocks for walls) above the empty shape.
    pub fn size(&self) -> i64 {
        match self {
            Shape::Eyd(t) => t.boxes(),
            Shape::Reyd(t) => t.boxes(),
            Shape::Wall(y) => y.size() as i64,
        }
    }

    pub fn render(&self) -> String {
        match self {
            Shape::Eyd(t) => t.render(),
            Shape::Reyd(t) => t.render(),
            Shape::Wall(y) => y.render(),
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shape::Eyd(t) => t.fmt(f),
            Shape::Reyd(t) => t.fmt(f),
            Shape::Wall(y) => y.fmt(f),
        }
    }
}

/// Which closed form describes `Comb_k[lambda]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CombCase {
    Singleton,
    TildeLadder,
    Ladder,
    Shapes,
}

pub fn comb_case(setting: &Setting, k: usize) -> CombCase {
    let ki = k as i64;
    if setting.class(k) == ShapeClass::Wall {
        return if setting.first_before(k, setting.pi_k(k, ki + 1)) {
            CombCase::Singleton
        } else {
            CombCase::Shapes
        };
    }
    let up = setting.first_before(k, setting.pi(ki + 1));
    let down = setting.first_before(k, setting.pi(ki - 1));
    match (up, down) {
        (true, true) => CombCase::Singleton,
        (true, false) => CombCase::TildeLadder,
        (false, true) => CombCase::Ladder,
        (false, false) => CombCase::Shapes,
    }
}

/// Coefficients of the two ladder terms; one may be doubled next to a
/// half-block colour.
fn ladder_weights(setting: &Setting, first: usize, second: usize) -> (i64, i64) {
    if first == second {
        (1, 1)
    } else if setting.is_half_color(first) {
        (2, 1)
    } else if setting.is_half_color(second) {
        (1, 2)
    } else {
        (1, 1)
    }
}

/// The ladder function for `r >= k+1`.
pub fn boxed(setting: &Setting, k: usize, r: i64) -> LinearForm {
    let (c1, c2) = (setting.pi(r), setting.pi(r - 1));
    let (w1, w2) = ladder_weights(setting, c1, c2);
    let mut f = LinearForm::zero();
    f.add_opt(setting.position(setting.pk(k, r), c1), w1);
    f.add_opt(setting.position(1 + setting.pk(k, r - 1), c2), -w2);
    f
}

/// The ladder function for `r <= k`.
pub fn boxed_tilde(setting: &Setting, k: usize, r: i64) -> LinearForm {
    let (c1, c2) = (setting.pi(r - 1), setting.pi(r));
    let (w1, w2) = ladder_weights(setting, c1, c2);
    let mut f = LinearForm::zero();
    f.add_opt(setting.position(setting.pk(k, r - 1), c1), w1);
    f.add_opt(setting.position(1 + setting.pk(k, r), c2), -w2);
    f
}

/// Where a form in a [`ShapeFunctionSet`] comes from.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Source {
    Singleton { k: usize },
    Ladder { k: usize, r: i64 },
    TildeLadder { k: usize, r: i64 },
    Shape { k: usize, s: i64, shape: Shape },
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Source::Singleton { k } => write!(f, "singleton k={k}"),
            Source::Ladder { k, r } => write!(f, "ladder k={k} r={r}"),
            Source::TildeLadder { k, r } => write!(f, "tilde ladder k={k} r={r}"),
            Source::Shape { k, s, shape } => write!(f, "k={k} s={s} {shape}"),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ShapeFunctionSet {
    pub tag: String,
    pub entries: Vec<(Source, LinearForm)>,
    /// False when the shape cap stopped an enumeration early.
    pub complete: bool,
}

impl ShapeFunctionSet {
    pub fn forms(&self) -> BTreeSet<LinearForm> {
        self.entries.iter().map(|(_, f)| f.clone()).collect()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Shapes reached from the empty shape by adding boxes, together with their
/// functions at offset `s`.
#[derive(Clone, Debug)]
pub struct Enumeration {
    pub items: Vec<(Shape, LinearForm)>,
    pub visited: usize,
    pub complete: bool,
}

/// Breadth-first by number of boxes. A shape is kept when its function lies
/// in `1..=window` and expanded when it lies in `1..=window + slack`.
pub fn enumerate_shapes(setting: &Setting, k: usize, s: i64, window: usize, slack: usize) -> Enumeration {
    let root = Shape::empty(setting, k);
    let mut seen: HashSet<Shape> = HashSet::new();
    seen.insert(root.clone());
    let mut frontier = vec![root];
    let mut items = Vec::new();
    let mut complete = true;
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for sh in frontier {
            let f = sh.form(setting, s);
            let m = f.max_pos();
            if m > window + slack {
                continue;
            }
            for c in sh.children() {
                if seen.len() >= SHAPE_CAP {
                    complete = false;
                    break;
                }
                if seen.insert(c.clone()) {
                    next.push(c);
                }
            }
            if m <= window {
                items.push((sh, f));
            }
        }
        next.sort();
        frontier = next;
    }
    Enumeration {
        items,
        visited: seen.len(),
        complete,
    }
}

/// `Comb_k[lambda]` inside the window, with `h = <h_k, lambda>`.
pub fn comb_lambda(setting: &Setting, k: usize, h: i64, window: usize) -> ShapeFunctionSet {
    comb_lambda_with_slack(setting, k, h, window, 0)
}

pub fn comb_lambda_with_slack(
    setting: &Setting,
    k: usize,
    h: i64,
    window: usize,
    slack: usize,
) -> ShapeFunctionSet {
    let ki = k as i64;
    let bound = window as i64;
    let mut entries = Vec::new();
    let mut complete = true;
    match comb_case(setting, k) {
        CombCase::Singleton => {
            let mut f = LinearForm::constant_form(h);
            f.add_scaled(&setting.x(1, k), -1);
            if f.max_pos() <= window {
                entries.push((Source::Singleton { k }, f));
            }
        }
        CombCase::Ladder => {
            let mut r = ki + 1;
            while setting.pk(k, r).min(1 + setting.pk(k, r - 1)) <= bound {
                let f = boxed(setting, k, r);
                if f.max_pos() <= window {
                    entries.push((Source::Ladder { k, r }, f.with_constant(h)));
                }
                r += 1;
            }
        }
        CombCase::TildeLadder => {
            let mut r = ki;
            while setting.pk(k, r - 1).min(1 + setting.pk(k, r)) <= bound {
                let f = boxed_tilde(setting, k, r);
                if f.max_pos() <= window {
                    entries.push((Source::TildeLadder { k, r }, f.with_constant(h)));
                }
                r -= 1;
            }
        }
        CombCase::Shapes => {
            let e = enumerate_shapes(setting, k, 0, window, slack);
            complete = e.complete;
            let mut seen = HashSet::new();
            for (shape, f) in e.items {
                if shape.size() == 0 || !seen.insert(f.clone()) {
                    continue;
                }
                entries.push((Source::Shape { k, s: 0, shape }, f.with_constant(h)));
            }
        }
    }
    ShapeFunctionSet {
        tag: format!("Comb_{k}[lambda]"),
        entries,
        complete,
    }
}

/// `Comb[infinity]` inside the window.
pub fn comb_infinity(setting: &Setting, window: usize) -> ShapeFunctionSet {
    comb_infinity_with_slack(setting, window, 0)
}

pub fn comb_infinity_with_slack(setting: &Setting, window: usize, slack: usize) -> ShapeFunctionSet {
    let period = setting.seq.period();
    let parts: Vec<(Vec<(Source, LinearForm)>, bool)> = (1..=setting.n())
        .into_par_iter()
        .map(|k| {
            let e = enumerate_shapes(setting, k, 1, window, slack);
            let mut entries = Vec::new();
            // Moving `s` by one moves every variable by one period.
            let mut seen = HashSet::new();
            for (shape, f1) in e.items {
                if !seen.insert(f1.clone()) {
                    continue;
                }
                let mut s = 1;
                let mut f = f1;
                while !f.is_zero() && f.max_pos() <= window {
                    let next = f.shifted(period);
                    entries.push((
                        Source::Shape {
                            k,
                            s,
                            shape: shape.clone(),
                        },
                        f,
                    ));
                    s += 1;
                    f = next;
                }
            }
            (entries, e.complete)
        })
        .collect();
    let complete = parts.iter().all(|p| p.1);
    ShapeFunctionSet {
        tag: "Comb[inf]".into(),
        entries: parts.into_iter().flat_map(|p| p.0).collect(),
        complete,
    }
}
