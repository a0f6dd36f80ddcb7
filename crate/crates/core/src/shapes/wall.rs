//! Proper Young walls for the `A2` and `D2` combinatorics.
//!
//! Columns are numbered `0, 1, ...` from the right. A column is described by
//! its height in half units, including the half block of the ground wall, so
//! the ground column has height 1. The layer starting at height `l` (for
//! `l >= k`) is coloured `pi'(l)`; it is a pair of half blocks when that
//! colour is `1` (or `n` for `D2`), and a unit block otherwise.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cartan::{pi, Family, Setting};
use crate::error::{Error, Result};
use crate::form::LinearForm;

/// An admissible slot or removable block at level `l` of column `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Site {
    pub column: usize,
    pub level: i64,
    pub color: usize,
    pub double: bool,
    pub removable: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Wall {
    variant: Family,
    n: usize,
    k: i64,
    heights: Vec<u32>,
}

impl Wall {
    /// The ground wall `Y_{Lambda_k}`.
    pub fn ground(variant: Family, n: usize, k: usize) -> Result<Self> {
        let ok = match variant {
            Family::A2 => k == 1,
            Family::D2 => k == 1 || k == n,
            _ => false,
        };
        if !ok {
            return Err(Error::InvalidShape(format!(
                "no Young walls of ground state Lambda_{k} for {variant}"
            )));
        }
        Ok(Wall {
            variant,
            n,
            k: k as i64,
            heights: Vec::new(),
        })
    }

    /// From column heights in half units, rightmost column first.
    pub fn from_heights(variant: Family, n: usize, k: usize, heights: &[u32]) -> Result<Self> {
        let mut w = Self::ground(variant, n, k)?;
        w.heights = heights.to_vec();
        w.trim();
        if let Some(i) = (0..w.heights.len()).find(|&i| !w.height_ok(w.heights[i])) {
            return Err(Error::InvalidShape(format!(
                "column {i} ends inside a unit block"
            )));
        }
        if !w.is_proper() {
            return Err(Error::InvalidShape("not a proper Young wall".into()));
        }
        Ok(w)
    }

    fn trim(&mut self) {
        while self.heights.last() == Some(&1) {
            self.heights.pop();
        }
    }

    pub fn charge(&self) -> usize {
        self.k as usize
    }

    pub fn heights(&self) -> &[u32] {
        &self.heights
    }

    pub fn height(&self, i: usize) -> u32 {
        self.heights.get(i).copied().unwrap_or(1)
    }

    /// Blocks above the ground wall, counted in half units.
    pub fn size(&self) -> u32 {
        self.heights.iter().map(|h| h - 1).sum()
    }

    pub fn layer_color(&self, level: i64) -> usize {
        pi(Family::C1, self.n, level)
    }

    fn layer_is_half(&self, level: i64) -> bool {
        let c = self.layer_color(level);
        match self.variant {
            Family::A2 => c == 1,
            _ => c == 1 || c == self.n,
        }
    }

    fn height_ok(&self, h: u32) -> bool {
        h >= 1 && (h.is_multiple_of(2) || self.layer_is_half(self.k + (h as i64 - 1) / 2))
    }

    /// Height after placing the next block on a column of height `h`, and
    /// the level of that block.
    fn next_block(&self, h: u32) -> (u32, i64) {
        if h % 2 == 1 {
            (h + 1, self.k + (h as i64 - 1) / 2)
        } else {
            let level = self.k + h as i64 / 2;
            if self.layer_is_half(level) {
                (h + 1, level)
            } else {
                (h + 2, level)
            }
        }
    }

    /// Height after removing the top block, or `None` for the ground.
    fn top_block(&self, h: u32) -> Option<(u32, i64)> {
        if h <= 1 {
            return None;
        }
        if h % 2 == 1 {
            Some((h - 1, self.k + (h as i64 - 1) / 2))
        } else {
            let level = self.k + h as i64 / 2 - 1;
            if self.layer_is_half(level) {
                Some((h - 1, level))
            } else {
                Some((h - 2, level))
            }
        }
    }

    fn with_height(&self, i: usize, h: u32) -> Wall {
        let mut w = self.clone();
        if i >= w.heights.len() {
            w.heights.resize(i + 1, 1);
        }
        w.heights[i] = h;
        w.trim();
        w
    }

    /// Weakly decreasing heights and no two full columns of equal height.
    pub fn is_proper(&self) -> bool {
        let hs = &self.heights;
        if hs.windows(2).any(|p| p[0] < p[1]) || hs.iter().any(|&h| h < 1) {
            return false;
        }
        let full: Vec<u32> = hs.iter().copied().filter(|h| h.is_multiple_of(2)).collect();
        full.windows(2).all(|p| p[0] != p[1])
    }

    pub fn sites(&self) -> Vec<Site> {
        let mut out = Vec::new();
        for i in 0..=self.heights.len() {
            let h = self.height(i);
            let (h2, level) = self.next_block(h);
            if self.with_height(i, h2).is_proper() {
                let double = h.is_multiple_of(2)
                    && self.layer_is_half(level)
                    && self.with_height(i, h + 2).is_proper();
                out.push(Site {
                    column: i,
                    level,
                    color: self.layer_color(level),
                    double,
                    removable: false,
                });
            }
            if let Some((h2, level)) = self.top_block(h) {
                if self.with_height(i, h2).is_proper() {
                    let double = h.is_multiple_of(2)
                        && h >= 4
                        && self.layer_is_half(level)
                        && self.with_height(i, h - 2).is_proper();
                    out.push(Site {
                        column: i,
                        level,
                        color: self.layer_color(level),
                        double,
                        removable: true,
                    });
                }
            }
        }
        out
    }

    pub fn site_index(&self, setting: &Setting, s: i64, site: &Site) -> (i64, usize) {
        let extra = if site.removable { 1 } else { 0 };
        (
            s + setting.pk(self.charge(), site.level) + site.column as i64 + extra,
            site.color,
        )
    }

    pub fn form(&self, setting: &Setting, s: i64) -> LinearForm {
        let mut f = LinearForm::zero();
        for site in self.sites() {
            let (a, col) = self.site_index(setting, s, &site);
            let w = if site.double { 2 } else { 1 };
            let sign = if site.removable { -1 } else { 1 };
            f.add_opt(setting.position(a, col), sign * w);
        }
        f
    }

    /// Places the next block on column `i` if the wall stays proper.
    pub fn add_block(&self, i: usize) -> Option<Wall> {
        let w = self.with_height(i, self.next_block(self.height(i)).0);
        w.is_proper().then_some(w)
    }

    /// Removes the top block of column `i` if the wall stays proper.
    pub fn remove_block(&self, i: usize) -> Option<Wall> {
        let (h, _) = self.top_block(self.height(i))?;
        let w = self.with_height(i, h);
        w.is_proper().then_some(w)
    }

    /// Adds one block at each admissible slot.
    pub fn children(&self) -> Vec<Wall> {
        self.sites()
            .iter()
            .filter(|s| !s.removable)
            .filter_map(|s| self.add_block(s.column))
            .collect()
    }

    /// Block colours of column `i` from the bottom; half blocks in parentheses.
    pub fn column_colors(&self, i: usize) -> Vec<String> {
        let mut out = Vec::new();
        let mut h = 0;
        let top = self.height(i);
        while h < top {
            let level = self.k + h as i64 / 2;
            let c = self.layer_color(level);
            if self.layer_is_half(level) {
                out.push(format!("({c})"));
                h += 1;
            } else {
                out.push(c.to_string());
                h += 2;
            }
        }
        out
    }

    pub fn render(&self) -> String {
        let cols = self.heights.len() + 1;
        let rows: Vec<Vec<String>> = (0..cols).rev().map(|i| self.column_colors(i)).collect();
        let depth = rows.iter().map(Vec::len).max().unwrap_or(0);
        let mut out = String::new();
        for r in (0..depth).rev() {
            let line: Vec<String> = rows
                .iter()
                .map(|c| format!("{:>4}", c.get(r).cloned().unwrap_or_default()))
                .collect();
            out.push_str(line.concat().trim_end());
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for Wall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let hs: Vec<String> = self.heights.iter().map(u32::to_string).collect();
        write!(f, "YW[Lambda_{}; half-heights={}]", self.k, hs.join(","))
    }
}
