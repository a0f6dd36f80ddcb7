//! Revised extended Young diagrams for the `A2` and `D2` combinatorics.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cartan::{pi, Family, Setting};
use crate::error::{Error, Result};
use crate::form::LinearForm;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PointKind {
    Admissible,
    Removable,
}

/// An admissible point `(i, y_i)` or removable point `(i, y_{i-1})`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Point {
    pub i: i64,
    pub j: i64,
    pub kind: PointKind,
    pub double: bool,
    pub color: usize,
}

/// `(y_t)_{t in Z}` stored as its deviation from the profile
/// `y_t = k` for `t >= 0`, `y_t = k + t` for `t < 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Reyd {
    variant: Family,
    n: usize,
    k: i64,
    dev: BTreeMap<i64, i64>,
}

impl Reyd {
    fn ground_at(k: i64, t: i64) -> i64 {
        if t >= 0 {
            k
        } else {
            k + t
        }
    }

    /// The diagram without boxes.
    pub fn empty(variant: Family, n: usize, k: usize) -> Result<Self> {
        let ok = match variant {
            Family::A2 => (2..=n).contains(&k),
            Family::D2 => (2..n).contains(&k),
            _ => false,
        };
        if !ok {
            return Err(Error::InvalidShape(format!(
                "no revised diagrams of charge {k} for {variant} with n={n}"
            )));
        }
        Ok(Reyd {
            variant,
            n,
            k: k as i64,
            dev: BTreeMap::new(),
        })
    }

    /// From explicit values on a finite range; other values follow the profile.
    pub fn from_values(variant: Family, n: usize, k: usize, values: &[(i64, i64)]) -> Result<Self> {
        let mut r = Self::empty(variant, n, k)?;
        for &(t, y) in values {
            r.set(t, y);
        }
        if let Some(t) = r.first_violation() {
            return Err(Error::InvalidShape(format!(
                "step from t={t} to t={} violates the step rules",
                t + 1
            )));
        }
        Ok(r)
    }

    pub fn charge(&self) -> usize {
        self.k as usize
    }

    pub fn y(&self, t: i64) -> i64 {
        self.dev
            .get(&t)
            .copied()
            .unwrap_or_else(|| Self::ground_at(self.k, t))
    }

    fn set(&mut self, t: i64, y: i64) {
        if y == Self::ground_at(self.k, t) {
            self.dev.remove(&t);
        } else {
            self.dev.insert(t, y);
        }
    }

    fn range(&self) -> (i64, i64) {
        let lo = self.dev.keys().next().copied().unwrap_or(0).min(0);
        let hi = self.dev.keys().next_back().copied().unwrap_or(0).max(0);
        (lo, hi)
    }

    /// Deviation map `t -> y_t` for the finitely many `t` off the profile.
    pub fn deviations(&self) -> &BTreeMap<i64, i64> {
        &self.dev
    }

    pub fn boxes(&self) -> i64 {
        self.dev
            .iter()
            .map(|(&t, &y)| Self::ground_at(self.k, t) - y)
            .sum()
    }

    fn special(&self, t: i64) -> bool {
        let n = self.n as i64;
        match self.variant {
            Family::A2 => (self.k + t).rem_euclid(2 * n - 1) == 0,
            _ => {
                let m = (self.k + t).rem_euclid(2 * n);
                m == 0 || m == n
            }
        }
    }

    fn step_ok(&self, t: i64, a: i64, b: i64) -> bool {
        if !self.special(t) {
            b == a || b == a + 1
        } else if t > 0 {
            b >= a
        } else if t < 0 {
            b <= a + 1
        } else {
            true
        }
    }

    fn first_violation(&self) -> Option<i64> {
        let (lo, hi) = self.range();
        ((lo - 2)..=(hi + 2)).find(|&t| !self.step_ok(t, self.y(t), self.y(t + 1)))
    }

    pub fn is_valid(&self) -> bool {
        self.first_violation().is_none()
    }

    fn local_ok(&self, t: i64, yt: i64) -> bool {
        self.step_ok(t - 1, self.y(t - 1), yt) && self.step_ok(t, yt, self.y(t + 1))
    }

    fn can_lower(&self, i: i64) -> bool {
        self.local_ok(i, self.y(i) - 1)
    }

    fn can_raise(&self, i: i64) -> bool {
        self.local_ok(i, self.y(i) + 1)
    }

    /// Lowers `y_i` by one if the result is a revised diagram.
    pub fn lower(&self, i: i64) -> Option<Reyd> {
        let v = self.y(i) - 1;
        self.local_ok(i, v).then(|| {
            let mut r = self.clone();
            r.set(i, v);
            r
        })
    }

    /// Raises `y_i` by one if the result is a revised diagram.
    pub fn raise(&self, i: i64) -> Option<Reyd> {
        let v = self.y(i) + 1;
        self.local_ok(i, v).then(|| {
            let mut r = self.clone();
            r.set(i, v);
            r
        })
    }

    fn modulus(&self) -> i64 {
        let n = self.n as i64;
        match self.variant {
            Family::A2 => 2 * n - 1,
            _ => 2 * n,
        }
    }

    /// Colour of a double admissible point at `i`, if the residue rule fires.
    fn double_adm_color(&self, i: i64) -> Option<usize> {
        let m = self.modulus();
        let c = (i + self.k).rem_euclid(m);
        self.double_residues().into_iter().find_map(|(l, col)| {
            let hit = (c == (l + 1).rem_euclid(m) && i < 0) || (c == l.rem_euclid(m) && i > 0);
            hit.then_some(col)
        })
    }

    fn double_rem_color(&self, i: i64) -> Option<usize> {
        let m = self.modulus();
        let c = (i + self.k - 1).rem_euclid(m);
        self.double_residues().into_iter().find_map(|(l, col)| {
            let hit = (c == (l + 1).rem_euclid(m) && i > 1) || (c == l.rem_euclid(m) && i < 1);
            hit.then_some(col)
        })
    }

    /// Residues `l` and colours of double points.
    fn double_residues(&self) -> Vec<(i64, usize)> {
        match self.variant {
            Family::A2 => vec![(0, 1)],
            _ => {
                let n = self.n as i64;
                vec![
                    (0, pi(Family::D2, self.n, 0)),
                    (n, pi(Family::D2, self.n, n)),
                ]
            }
        }
    }

    pub fn color(&self, t: i64) -> usize {
        pi(self.variant, self.n, t)
    }

    pub fn points(&self) -> Vec<Point> {
        let (lo, hi) = self.range();
        let mut out = Vec::new();
        for i in (lo - 3)..=(hi + 3) {
            if self.can_lower(i) {
                let (yl, y, yr) = (self.y(i - 1), self.y(i), self.y(i + 1));
                let dbl = if yl < y && y == yr {
                    self.double_adm_color(i)
                } else {
                    None
                };
                out.push(Point {
                    i,
                    j: y,
                    kind: PointKind::Admissible,
                    double: dbl.is_some(),
                    color: dbl.unwrap_or_else(|| self.color(i + self.k)),
                });
            }
            if self.can_raise(i - 1) {
                let (a, b, c) = (self.y(i - 2), self.y(i - 1), self.y(i));
                let dbl = if a == b && b < c {
                    self.double_rem_color(i)
                } else {
                    None
                };
                out.push(Point {
                    i,
                    j: b,
                    kind: PointKind::Removable,
                    double: dbl.is_some(),
                    color: dbl.unwrap_or_else(|| self.color(i + self.k - 1)),
                });
            }
        }
        out
    }

    /// `(s', colour)` of the variable attached to a point.
    pub fn point_index(&self, setting: &Setting, s: i64, p: &Point) -> (i64, usize) {
        let k = self.charge();
        match p.kind {
            PointKind::Admissible => (
                s + setting.pk(k, p.i + self.k) + p.i.min(0) + self.k - p.j,
                setting.pi(p.i + self.k),
            ),
            PointKind::Removable => (
                s + setting.pk(k, p.i + self.k - 1) + (p.i - 1).min(0) + self.k - p.j,
                setting.pi(p.i + self.k - 1),
            ),
        }
    }

    pub fn form(&self, setting: &Setting, s: i64) -> LinearForm {
        let mut f = LinearForm::zero();
        for p in self.points() {
            let (a, col) = self.point_index(setting, s, &p);
            let w = if p.double { 2 } else { 1 };
            let sign = match p.kind {
                PointKind::Admissible => 1,
                PointKind::Removable => -1,
            };
            f.add_opt(setting.position(a, col), sign * w);
        }
        f
    }

    pub fn children(&self) -> Vec<Reyd> {
        self.points()
            .iter()
            .filter(|p| p.kind == PointKind::Admissible)
            .filter_map(|p| self.lower(p.i))
            .collect()
    }

    /// One row per height from `k` down to the lowest value on the range.
    pub fn render(&self) -> String {
        let (lo, hi) = self.range();
        let (lo, hi) = (lo - 1, hi + 1);
        let bottom = (lo..=hi).map(|t| self.y(t)).min().unwrap_or(self.k);
        let mut out = String::new();
        for h in (bottom..self.k).rev() {
            let line: String = (lo..=hi)
                .map(|t| {
                    let g = Self::ground_at(self.k, t);
                    if h >= g {
                        ' '
                    } else if h >= self.y(t) {
                        '#'
                    } else {
                        '.'
                    }
                })
                .collect();
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for Reyd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.dev.iter().map(|(t, y)| format!("{t}:{y}")).collect();
        write!(f, "REYD[k={}; {}]", self.k, parts.join(","))
    }
}
