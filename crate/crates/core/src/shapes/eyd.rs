//! Extended Young diagrams of charge `k`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cartan::Setting;
use crate::error::{Error, Result};
use crate::form::LinearForm;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CornerKind {
    Concave,
    Convex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Corner {
    pub i: i64,
    pub j: i64,
    pub kind: CornerKind,
}

/// A nondecreasing sequence `(y_r)_{r>=0}` that equals `k` from some point on,
/// stored as the column depths `k - y_r` before that point.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Eyd {
    k: i64,
    depths: Vec<i64>,
}

impl Eyd {
    /// The empty diagram `phi^k`.
    pub fn empty(k: usize) -> Self {
        Eyd {
            k: k as i64,
            depths: Vec::new(),
        }
    }

    /// From the values `y_0, y_1, ...`; later values are taken to be `k`.
    pub fn from_values(k: usize, ys: &[i64]) -> Result<Self> {
        let ki = k as i64;
        let mut prev = i64::MIN;
        for (r, &y) in ys.iter().enumerate() {
            if y > ki {
                return Err(Error::InvalidShape(format!("y_{r} = {y} exceeds the charge {k}")));
            }
            if y < prev {
                return Err(Error::InvalidShape(format!("y_{r} = {y} < y_{}", r as i64 - 1)));
            }
            prev = y;
        }
        let mut depths: Vec<i64> = ys.iter().map(|&y| ki - y).collect();
        while depths.last() == Some(&0) {
            depths.pop();
        }
        Ok(Eyd { k: ki, depths })
    }

    pub fn charge(&self) -> usize {
        self.k as usize
    }

    pub fn y(&self, r: i64) -> i64 {
        self.k - self.depths.get(r as usize).copied().unwrap_or(0)
    }

    /// `y_0, ..., y_m` up to and including the first value equal to `k`.
    pub fn values(&self) -> Vec<i64> {
        (0..=self.depths.len() as i64).map(|r| self.y(r)).collect()
    }

    pub fn boxes(&self) -> i64 {
        self.depths.iter().sum()
    }

    pub fn corners(&self) -> Vec<Corner> {
        let mut out = vec![Corner {
            i: 0,
            j: self.y(0),
            kind: CornerKind::Concave,
        }];
        for r in 0..self.depths.len() as i64 {
            let (a, b) = (self.y(r), self.y(r + 1));
            if a < b {
                out.push(Corner {
                    i: r + 1,
                    j: a,
                    kind: CornerKind::Convex,
                });
                out.push(Corner {
                    i: r + 1,
                    j: b,
                    kind: CornerKind::Concave,
                });
            }
        }
        out
    }

    /// Lowers `y_i` by one; legal exactly at concave corners.
    pub fn add_box(&self, i: i64) -> Option<Eyd> {
        let iu = i as usize;
        let d = self.depths.get(iu).copied().unwrap_or(0);
        if iu > self.depths.len() {
            return None;
        }
        if i > 0 && self.depths[iu - 1] <= d {
            return None;
        }
        let mut depths = self.depths.clone();
        if iu == depths.len() {
            depths.push(1);
        } else {
            depths[iu] += 1;
        }
        Some(Eyd { k: self.k, depths })
    }

    /// Raises `y_i` by one; legal exactly when `(i+1, y_i)` is convex.
    pub fn remove_box(&self, i: i64) -> Option<Eyd> {
        let iu = i as usize;
        if iu >= self.depths.len() {
            return None;
        }
        let next = self.depths.get(iu + 1).copied().unwrap_or(0);
        if self.depths[iu] <= next {
            return None;
        }
        let mut depths = self.depths.clone();
        depths[iu] -= 1;
        while depths.last() == Some(&0) {
            depths.pop();
        }
        Some(Eyd { k: self.k, depths })
    }

    pub fn children(&self) -> Vec<Eyd> {
        self.corners()
            .iter()
            .filter(|c| c.kind == CornerKind::Concave)
            .filter_map(|c| self.add_box(c.i))
            .collect()
    }

    /// `(s', colour)` of the variable attached to the corner `(i, j)`.
    pub fn corner_index(&self, setting: &Setting, s: i64, i: i64, j: i64) -> (i64, usize) {
        let k = self.charge();
        (
            s + setting.pk(k, i + j) + (self.k - j).min(i),
            setting.pi(i + j),
        )
    }

    /// Sum over concave corners minus sum over convex corners.
    pub fn form(&self, setting: &Setting, s: i64) -> LinearForm {
        let mut f = LinearForm::zero();
        for c in self.corners() {
            let (a, col) = self.corner_index(setting, s, c.i, c.j);
            let sign = match c.kind {
                CornerKind::Concave => 1,
                CornerKind::Convex => -1,
            };
            f.add_opt(setting.position(a, col), sign);
        }
        f
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let max = self.depths.first().copied().unwrap_or(0);
        for row in 0..max {
            let line: String = self
                .depths
                .iter()
                .map(|&d| if d > row { '#' } else { ' ' })
                .collect();
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for Eyd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.values().iter().map(i64::to_string).collect();
        write!(f, "EYD[k={}; y={}, ...]", self.k, v.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn corners_of(e: &Eyd, kind: CornerKind) -> Vec<(i64, i64)> {
        e.corners()
            .into_iter()
            .filter(|c| c.kind == kind)
            .map(|c| (c.i, c.j))
            .collect()
    }

    #[test]
    fn corner_example() {
        let t = Eyd::from_values(1, &[-3, -2, -1, -1, 0, 1]).unwrap();
        assert_eq!(
            corners_of(&t, CornerKind::Convex),
            vec![(1, -3), (2, -2), (4, -1), (5, 0)]
        );
        assert_eq!(
            corners_of(&t, CornerKind::Concave),
            vec![(0, -3), (1, -2), (2, -1), (4, 0), (5, 1)]
        );
    }

    #[test]
    fn empty_and_one_box() {
        let e = Eyd::empty(2);
        assert_eq!(corners_of(&e, CornerKind::Concave), vec![(0, 2)]);
        assert!(corners_of(&e, CornerKind::Convex).is_empty());
        let t1 = e.add_box(0).unwrap();
        let mut conc = corners_of(&t1, CornerKind::Concave);
        conc.sort();
        assert_eq!(conc, vec![(0, 1), (1, 2)]);
        assert_eq!(corners_of(&t1, CornerKind::Convex), vec![(1, 1)]);
        assert_eq!(t1.remove_box(0), Some(e));
    }

    #[test]
    fn rejects_illegal() {
        assert!(Eyd::from_values(1, &[0, -1]).is_err());
        assert!(Eyd::from_values(1, &[2]).is_err());
    }
}
