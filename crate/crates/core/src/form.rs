//! Linear forms `c + sum phi_r x_r` and finitely supported vectors.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use crate::cartan::Setting;
use crate::error::{Error, Result};

/// A finitely supported nonnegative integer vector `(..., a_2, a_1)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZVector {
    entries: BTreeMap<usize, i64>,
}

impl ZVector {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Builds from `[a_1, a_2, ...]`.
    pub fn from_flat(values: &[i64]) -> Self {
        let mut v = Self::zero();
        for (i, &a) in values.iter().enumerate() {
            v.set(i + 1, a);
        }
        v
    }

    pub fn unit(r: usize) -> Self {
        let mut v = Self::zero();
        v.set(r, 1);
        v
    }

    pub fn get(&self, r: usize) -> i64 {
        self.entries.get(&r).copied().unwrap_or(0)
    }

    pub fn set(&mut self, r: usize, a: i64) {
        if a == 0 {
            self.entries.remove(&r);
        } else {
            self.entries.insert(r, a);
        }
    }

    pub fn add(&mut self, r: usize, d: i64) {
        let a = self.get(r) + d;
        self.set(r, a);
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Largest position with a nonzero entry, 0 for the zero vector.
    pub fn max_pos(&self) -> usize {
        self.entries.keys().next_back().copied().unwrap_or(0)
    }

    /// `|a|`, the sum of all entries.
    pub fn size(&self) -> i64 {
        self.entries.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.entries.iter().map(|(&r, &a)| (r, a))
    }

    pub fn to_flat(&self) -> Vec<i64> {
        (1..=self.max_pos()).map(|r| self.get(r)).collect()
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &ZVector) -> bool {
        self.iter().all(|(r, a)| a <= other.get(r))
    }

    /// Accepts `[a1, a2, ...]` or `{(s,k):v, ...}`.
    pub fn parse(text: &str, setting: &Setting) -> Result<Self> {
        let t = text.trim();
        if let Some(body) = t.strip_prefix('[').and_then(|b| b.strip_suffix(']')) {
            let vals = body
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<i64>()
                        .map_err(|_| Error::Parse(format!("bad entry '{s}'")))
                })
                .collect::<Result<Vec<_>>>()?;
            return check_nonnegative(Self::from_flat(&vals));
        }
        if let Some(body) = t.strip_prefix('{').and_then(|b| b.strip_suffix('}')) {
            let mut v = Self::zero();
            let mut rest = body.trim();
            while !rest.is_empty() {
                let open = rest
                    .find('(')
                    .ok_or_else(|| Error::Parse(format!("expected '(' in '{rest}'")))?;
                let close = rest
                    .find(')')
                    .ok_or_else(|| Error::Parse(format!("expected ')' in '{rest}'")))?;
                let pair: Vec<&str> = rest[open + 1..close].split(',').map(str::trim).collect();
                if pair.len() != 2 {
                    return Err(Error::Parse(format!("bad index '{}'", &rest[open..=close])));
                }
                let s: usize = pair[0]
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad s '{}'", pair[0])))?;
                let k: usize = pair[1]
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad k '{}'", pair[1])))?;
                if s == 0 || k == 0 || k > setting.n() {
                    return Err(Error::Parse(format!("index ({s},{k}) out of range")));
                }
                let after = rest[close + 1..].trim_start();
                let after = after
                    .strip_prefix(':')
                    .ok_or_else(|| Error::Parse("expected ':' after index".into()))?;
                let end = after.find(',').unwrap_or(after.len());
                let val: i64 = after[..end]
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad value '{}'", after[..end].trim())))?;
                v.add(setting.seq.pos_of(s, k), val);
                rest = after[end..].trim_start_matches(',').trim();
            }
            return check_nonnegative(v);
        }
        Err(Error::Parse(format!("unrecognised vector '{text}'")))
    }

    /// `{(s,k):v, ...}` in increasing position order.
    pub fn display_with(&self, setting: &Setting) -> String {
        let parts: Vec<String> = self
            .iter()
            .map(|(r, a)| {
                let (s, k) = setting.seq.pair_of(r);
                format!("({s},{k}):{a}")
            })
            .collect();
        format!("{{{}}}", parts.join(", "))
    }
}

fn check_nonnegative(v: ZVector) -> Result<ZVector> {
    let bad = v.iter().find(|&(_, a)| a < 0);
    match bad {
        Some((r, a)) => Err(Error::Parse(format!("negative entry {a} at position {r}"))),
        None => Ok(v),
    }
}

impl fmt::Display for ZVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let flat: Vec<String> = self.to_flat().iter().map(i64::to_string).collect();
        write!(f, "[{}]", flat.join(","))
    }
}

/// `c + sum_r phi_r x_r` with no zero coefficients stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LinearForm {
    constant: i64,
    coeffs: BTreeMap<usize, i64>,
}

impl LinearForm {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant_form(c: i64) -> Self {
        LinearForm {
            constant: c,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn var(r: usize) -> Self {
        let mut f = Self::zero();
        f.add_term(r, 1);
        f
    }

    pub fn from_terms(constant: i64, terms: &[(usize, i64)]) -> Self {
        let mut f = Self::constant_form(constant);
        for &(r, c) in terms {
            f.add_term(r, c);
        }
        f
    }

    pub fn constant(&self) -> i64 {
        self.constant
    }

    pub fn coeff(&self, r: usize) -> i64 {
        self.coeffs.get(&r).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (usize, i64)> + '_ {
        self.coeffs.iter().map(|(&r, &c)| (r, c))
    }

    pub fn is_zero(&self) -> bool {
        self.constant == 0 && self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, r: usize, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.coeffs.entry(r).or_insert(0);
        *e += c;
        if *e == 0 {
            self.coeffs.remove(&r);
        }
    }

    /// Adds `c * x_r`, where `None` stands for a variable with index `< 1`.
    pub fn add_opt(&mut self, r: Option<usize>, c: i64) {
        if let Some(r) = r {
            self.add_term(r, c);
        }
    }

    pub fn add_constant(&mut self, c: i64) {
        self.constant += c;
    }

    pub fn add_scaled(&mut self, other: &LinearForm, m: i64) {
        self.constant += m * other.constant;
        for (r, c) in other.terms() {
            self.add_term(r, m * c);
        }
    }

    pub fn plus(&self, other: &LinearForm) -> LinearForm {
        let mut f = self.clone();
        f.add_scaled(other, 1);
        f
    }

    pub fn minus(&self, other: &LinearForm) -> LinearForm {
        let mut f = self.clone();
        f.add_scaled(other, -1);
        f
    }

    pub fn with_constant(&self, c: i64) -> LinearForm {
        LinearForm {
            constant: c,
            coeffs: self.coeffs.clone(),
        }
    }

    /// The form with every variable moved `by` positions to the right.
    pub fn shifted(&self, by: usize) -> LinearForm {
        LinearForm {
            constant: self.constant,
            coeffs: self.coeffs.iter().map(|(&r, &c)| (r + by, c)).collect(),
        }
    }

    /// Largest position with a nonzero coefficient, 0 if none.
    pub fn max_pos(&self) -> usize {
        self.coeffs.keys().next_back().copied().unwrap_or(0)
    }

    pub fn min_pos(&self) -> usize {
        self.coeffs.keys().next().copied().unwrap_or(0)
    }

    pub fn eval(&self, a: &ZVector) -> i64 {
        let mut v = self.constant;
        if self.coeffs.len() <= a.entries.len() {
            for (r, c) in self.terms() {
                v += c * a.get(r);
            }
        } else {
            for (r, x) in a.iter() {
                v += self.coeff(r) * x;
            }
        }
        v
    }

    /// Output order: by largest position, then by coefficients, then constant.
    pub fn display_cmp(&self, other: &LinearForm) -> Ordering {
        self.max_pos()
            .cmp(&other.max_pos())
            .then_with(|| {
                let a: Vec<_> = self.terms().collect();
                let b: Vec<_> = other.terms().collect();
                a.cmp(&b)
            })
            .then_with(|| self.constant.cmp(&other.constant))
    }

    /// `c + coeff*x[s,k] + ...`.
    pub fn display_with(&self, setting: &Setting) -> String {
        let mut out = String::new();
        for (r, c) in self.terms() {
            let (s, k) = setting.seq.pair_of(r);
            let sign = if c < 0 { "-" } else { "+" };
            if out.is_empty() {
                if c < 0 {
                    out.push('-');
                }
            } else {
                let _ = write!(out, " {sign} ");
            }
            if c.abs() != 1 {
                let _ = write!(out, "{}*", c.abs());
            }
            let _ = write!(out, "x[{s},{k}]");
        }
        if self.constant != 0 || out.is_empty() {
            if out.is_empty() {
                let _ = write!(out, "{}", self.constant);
            } else if self.constant < 0 {
                let _ = write!(out, " - {}", -self.constant);
            } else {
                let _ = write!(out, " + {}", self.constant);
            }
        }
        out
    }

    pub fn to_json(&self, setting: &Setting) -> FormJson {
        FormJson {
            constant: self.constant,
            terms: self
                .terms()
                .map(|(r, coeff)| {
                    let (s, k) = setting.seq.pair_of(r);
                    TermJson { s, k, coeff }
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub s: usize,
    pub k: usize,
    pub coeff: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormJson {
    pub constant: i64,
    pub terms: Vec<TermJson>,
}

impl Setting {
    /// The variable `x_{s,k}`, zero when `s < 1`.
    pub fn x(&self, s: i64, k: usize) -> LinearForm {
        let mut f = LinearForm::zero();
        f.add_opt(self.position(s, k), 1);
        f
    }
}
