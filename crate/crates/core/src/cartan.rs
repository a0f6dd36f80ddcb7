//! Affine type data, colouring maps, adapted sequences and the integers
//! `p_{i,j}` and `P_k(t)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The four affine families, named by the label of their Dynkin diagram.
///
/// `A1` is A^(1)_{n-1}, `C1` is C^(1)_{n-1}, `A2` is A^(2)_{2n-2} and `D2` is
/// D^(2)_n. The index set is always `{1..n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A1,
    C1,
    A2,
    D2,
}

impl Family {
    pub fn min_rank(self) -> usize {
        match self {
            Family::A1 => 2,
            _ => 3,
        }
    }

    /// Label of the Langlands dual family, which names the combinatorics.
    pub fn dual(self) -> Family {
        match self {
            Family::A1 => Family::A1,
            Family::C1 => Family::D2,
            Family::A2 => Family::A2,
            Family::D2 => Family::C1,
        }
    }

    pub fn parse(s: &str) -> Result<Family> {
        let t: String = s
            .chars()
            .filter(|c| !matches!(c, '(' | ')' | '^' | '_' | ' '))
            .collect::<String>()
            .to_ascii_uppercase();
        match t.as_str() {
            "A1" => Ok(Family::A1),
            "C1" => Ok(Family::C1),
            "A2" => Ok(Family::A2),
            "D2" => Ok(Family::D2),
            _ => Err(Error::Parse(format!("unknown family '{s}'"))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A1 => "A1",
            Family::C1 => "C1",
            Family::A2 => "A2",
            Family::D2 => "D2",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AffineType {
    pub family: Family,
    pub n: usize,
}

impl AffineType {
    pub fn new(family: Family, n: usize) -> Result<Self> {
        if n < family.min_rank() {
            return Err(Error::RankTooSmall {
                family: family.to_string(),
                n,
                min: family.min_rank(),
            });
        }
        Ok(AffineType { family, n })
    }

    /// Conventional name, e.g. `A^(2)_4` for `(A2, 3)`.
    pub fn name(&self) -> String {
        let n = self.n;
        match self.family {
            Family::A1 => format!("A^(1)_{}", n - 1),
            Family::C1 => format!("C^(1)_{}", n - 1),
            Family::A2 => format!("A^(2)_{}", 2 * n - 2),
            Family::D2 => format!("D^(2)_{}", n),
        }
    }

    pub fn cartan_matrix(&self) -> CartanData {
        cartan_matrix(*self)
    }
}

/// Generalized Cartan matrix `a_{i,j} = <h_i, alpha_j>`, indices 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CartanData {
    n: usize,
    a: Vec<i64>,
}

impl CartanData {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.a[(i - 1) * self.n + (j - 1)]
    }

    pub fn coupled(&self, i: usize, j: usize) -> bool {
        i != j && self.get(i, j) < 0
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (1..=self.n)
            .map(|i| (1..=self.n).map(|j| self.get(i, j)).collect())
            .collect()
    }

    fn set(&mut self, i: usize, j: usize, v: i64) {
        self.a[(i - 1) * self.n + (j - 1)] = v;
    }
}

/// An arrow `i => j` in a diagram with a double bond gives `a_{j,i} = -2`.
pub fn cartan_matrix(ty: AffineType) -> CartanData {
    let n = ty.n;
    let mut c = CartanData {
        n,
        a: vec![0; n * n],
    };
    for i in 1..=n {
        c.set(i, i, 2);
    }
    match ty.family {
        Family::A1 if n == 2 => {
            c.set(1, 2, -2);
            c.set(2, 1, -2);
        }
        Family::A1 => {
            for i in 1..=n {
                let j = i % n + 1;
                c.set(i, j, -1);
                c.set(j, i, -1);
            }
        }
        _ => {
            for i in 1..n {
                c.set(i, i + 1, -1);
                c.set(i + 1, i, -1);
            }
            match ty.family {
                Family::C1 => {
                    c.set(2, 1, -2);
                    c.set(n - 1, n, -2);
                }
                Family::A2 => {
                    c.set(2, 1, -2);
                    c.set(n, n - 1, -2);
                }
                Family::D2 => {
                    c.set(1, 2, -2);
                    c.set(n, n - 1, -2);
                }
                Family::A1 => unreachable!(),
            }
        }
    }
    c
}

/// Period of the colouring map `pi_X` for the combinatorial label `x`.
pub fn pi_period(x: Family, n: usize) -> i64 {
    let n = n as i64;
    match x {
        Family::A1 => n,
        Family::C1 => 2 * n - 2,
        Family::A2 => 2 * n - 1,
        Family::D2 => 2 * n,
    }
}

/// The folding map `pi_X : Z -> I`.
pub fn pi(x: Family, n: usize, t: i64) -> usize {
    let p = pi_period(x, n);
    let ni = n as i64;
    let u = (t - 1).rem_euclid(p) + 1;
    let v = match x {
        Family::A1 => u,
        Family::C1 | Family::A2 => {
            if u <= ni {
                u
            } else {
                2 * ni - u
            }
        }
        Family::D2 => {
            if u <= ni {
                u
            } else {
                2 * ni + 1 - u
            }
        }
    };
    v as usize
}

/// The map `pi' : Z_{>=1} -> I`, period `2n-2`, `1 -> 1`, `n -> n`.
pub fn pi_prime(n: usize, l: i64) -> Result<usize> {
    if l < 1 {
        return Err(Error::PiPrimeDomain(l));
    }
    Ok(pi(Family::C1, n, l))
}

/// A periodic infinite sequence `iota = (..., i_2, i_1)`, stored as the
/// repeating word `[i_1, i_2, ...]`. Positions are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AdaptedSequence {
    word: Vec<usize>,
    n: usize,
    occ: Vec<Vec<usize>>,
}

impl AdaptedSequence {
    /// Validates that every letter lies in `I`, that every index occurs and
    /// that no two consecutive letters (cyclically) coincide.
    pub fn new(word: Vec<usize>, n: usize) -> Result<Self> {
        if word.is_empty() {
            return Err(Error::BadSequence("empty word".into()));
        }
        for &w in &word {
            if w == 0 || w > n {
                return Err(Error::IndexOutOfRange { index: w, n });
            }
        }
        let len = word.len();
        for r in 0..len {
            if word[r] == word[(r + 1) % len] {
                return Err(Error::BadSequence(format!(
                    "i_{} = i_{} = {}",
                    r + 1,
                    r + 2,
                    word[r]
                )));
            }
        }
        let mut occ = vec![Vec::new(); n + 1];
        for (idx, &w) in word.iter().enumerate() {
            occ[w].push(idx);
        }
        if let Some(k) = (1..=n).find(|&k| occ[k].is_empty()) {
            return Err(Error::BadSequence(format!("index {k} never occurs")));
        }
        Ok(AdaptedSequence { word, n, occ })
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn period(&self) -> usize {
        self.word.len()
    }

    /// `i_r`.
    pub fn color(&self, r: usize) -> usize {
        self.word[(r - 1) % self.word.len()]
    }

    /// Position of the `s`-th occurrence of `k` (`s >= 1`).
    pub fn pos_of(&self, s: usize, k: usize) -> usize {
        let o = &self.occ[k];
        let q = (s - 1) / o.len();
        let m = (s - 1) % o.len();
        q * self.word.len() + o[m] + 1
    }

    /// Inverse of [`pos_of`](Self::pos_of).
    pub fn pair_of(&self, r: usize) -> (usize, usize) {
        let len = self.word.len();
        let k = self.color(r);
        let q = (r - 1) / len;
        let idx = (r - 1) % len;
        let m = self.occ[k].iter().position(|&o| o == idx).unwrap();
        (q * self.occ[k].len() + m + 1, k)
    }

    /// `r^(+)`.
    pub fn next_same(&self, r: usize) -> usize {
        let (s, k) = self.pair_of(r);
        self.pos_of(s + 1, k)
    }

    /// `r^(-)`, with 0 when `r` is the first occurrence of its index.
    pub fn prev_same(&self, r: usize) -> usize {
        let (s, k) = self.pair_of(r);
        if s == 1 {
            0
        } else {
            self.pos_of(s - 1, k)
        }
    }

    /// `iota^(k)`, the first position carrying `k`.
    pub fn first(&self, k: usize) -> usize {
        self.occ[k][0] + 1
    }
}

/// Why a word fails to be adapted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Letter { index: usize },
    Missing { index: usize },
    Repeat { position: usize, index: usize },
    NotAlternating { i: usize, j: usize, position: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Letter { index } => write!(f, "letter {index} is not in I"),
            Violation::Missing { index } => write!(f, "index {index} never occurs"),
            Violation::Repeat { position, index } => {
                write!(f, "i_{position} = i_{} = {index}", position + 1)
            }
            Violation::NotAlternating { i, j, position } => write!(
                f,
                "subsequence on {{{i},{j}}} repeats at position {position}"
            ),
        }
    }
}

/// Checks condition `i_r != i_{r+1}` and alternation of every coupled pair on
/// the periodic extension of `word`.
pub fn check_adapted(word: &[usize], cartan: &CartanData) -> std::result::Result<(), Violation> {
    let n = cartan.n();
    if let Some(&w) = word.iter().find(|&&w| w == 0 || w > n) {
        return Err(Violation::Letter { index: w });
    }
    if let Some(k) = (1..=n).find(|k| !word.contains(k)) {
        return Err(Violation::Missing { index: k });
    }
    let len = word.len();
    for r in 0..len {
        if word[r] == word[(r + 1) % len] {
            return Err(Violation::Repeat {
                position: r + 1,
                index: word[r],
            });
        }
    }
    for i in 1..=n {
        for j in (i + 1)..=n {
            if !cartan.coupled(i, j) {
                continue;
            }
            let mut last = 0;
            for r in 0..(2 * len + 1) {
                let w = word[r % len];
                if w == i || w == j {
                    if w == last {
                        return Err(Violation::NotAlternating { i, j, position: r + 1 });
                    }
                    last = w;
                }
            }
        }
    }
    Ok(())
}

/// The integers `p_{i,j}` for coupled pairs (zero elsewhere).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PMatrix {
    n: usize,
    p: Vec<i64>,
}

impl PMatrix {
    pub fn new(seq: &AdaptedSequence, cartan: &CartanData) -> Result<Self> {
        check_adapted(seq.word(), cartan).map_err(|v| Error::NotAdapted(v.to_string()))?;
        let n = cartan.n();
        let mut p = vec![0; n * n];
        for i in 1..=n {
            for j in 1..=n {
                if cartan.coupled(i, j) && seq.first(i) < seq.first(j) {
                    p[(i - 1) * n + (j - 1)] = 1;
                }
            }
        }
        Ok(PMatrix { n, p })
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.p[(i - 1) * self.n + (j - 1)]
    }
}

/// Which family of combinatorial objects produces the inequalities for `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ShapeClass {
    Eyd,
    Reyd,
    Wall,
}

/// `P_k(t)` in closed form: the increments are periodic in `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct PTable {
    k: i64,
    period: i64,
    wall: bool,
    up: Vec<i64>,
    down: Vec<i64>,
}

impl PTable {
    fn eval(&self, t: i64) -> Result<i64> {
        let m = t - self.k;
        if m >= 0 {
            let (q, r) = (m / self.period, (m % self.period) as usize);
            Ok(q * self.up[self.period as usize] + self.up[r])
        } else if self.wall {
            Err(Error::PBranch { k: self.k, t })
        } else {
            let m = -m;
            let (q, r) = (m / self.period, (m % self.period) as usize);
            Ok(q * self.down[self.period as usize] + self.down[r])
        }
    }
}

/// Everything determined by the affine type and the sequence: Cartan data,
/// the position dictionary, `p_{i,j}` and the `P_k` tables.
#[derive(Clone, Debug)]
pub struct Setting {
    pub ty: AffineType,
    pub cartan: CartanData,
    pub seq: AdaptedSequence,
    pub p: PMatrix,
    tables: Vec<PTable>,
}

impl Setting {
    pub fn new(ty: AffineType, word: Vec<usize>) -> Result<Self> {
        let cartan = ty.cartan_matrix();
        let seq = AdaptedSequence::new(word, ty.n)?;
        let p = PMatrix::new(&seq, &cartan)?;
        let mut s = Setting {
            ty,
            cartan,
            seq,
            p,
            tables: Vec::new(),
        };
        s.tables = (1..=ty.n).map(|k| s.build_table(k)).collect();
        Ok(s)
    }

    pub fn n(&self) -> usize {
        self.ty.n
    }

    /// Label `X^L` of the combinatorics.
    pub fn label(&self) -> Family {
        self.ty.family.dual()
    }

    pub fn class(&self, k: usize) -> ShapeClass {
        match self.label() {
            Family::A1 | Family::C1 => ShapeClass::Eyd,
            Family::A2 if k == 1 => ShapeClass::Wall,
            Family::D2 if k == 1 || k == self.n() => ShapeClass::Wall,
            _ => ShapeClass::Reyd,
        }
    }

    /// Indices not in `I_X` (those coloured by half blocks).
    pub fn is_half_color(&self, c: usize) -> bool {
        match self.label() {
            Family::A2 => c == 1,
            Family::D2 => c == 1 || c == self.n(),
            _ => false,
        }
    }

    /// `pi_X(t)` for the combinatorial label.
    pub fn pi(&self, t: i64) -> usize {
        pi(self.label(), self.n(), t)
    }

    /// The colouring used for `k`: `pi'` on the Young wall branch.
    pub fn pi_k(&self, k: usize, t: i64) -> usize {
        if self.class(k) == ShapeClass::Wall {
            pi(Family::C1, self.n(), t)
        } else {
            self.pi(t)
        }
    }

    fn build_table(&self, k: usize) -> PTable {
        let wall = self.class(k) == ShapeClass::Wall;
        let period = if wall {
            pi_period(Family::C1, self.n())
        } else {
            pi_period(self.label(), self.n())
        };
        let ki = k as i64;
        let mut up = vec![0];
        let mut down = vec![0];
        for m in 1..=period {
            let u = ki + m;
            let inc = self.p.get(self.pi_k(k, u), self.pi_k(k, u - 1));
            up.push(up[(m - 1) as usize] + inc);
            if !wall {
                let u = ki - m;
                let inc = self.p.get(self.pi_k(k, u), self.pi_k(k, u + 1));
                down.push(down[(m - 1) as usize] + inc);
            }
        }
        PTable {
            k: ki,
            period,
            wall,
            up,
            down,
        }
    }

    /// `P_k(t)`; on the Young wall branch only `t >= k` is defined.
    pub fn big_p(&self, k: usize, t: i64) -> Result<i64> {
        self.tables[k - 1].eval(t)
    }

    pub(crate) fn pk(&self, k: usize, t: i64) -> i64 {
        self.big_p(k, t).expect("P evaluated outside its domain")
    }

    /// Position of `(s, k)`, or `None` when `s < 1` (the zero variable).
    pub fn position(&self, s: i64, k: usize) -> Option<usize> {
        (s >= 1).then(|| self.seq.pos_of(s as usize, k))
    }

    /// Whether `(1, a)` precedes `(1, b)` in the order on positions.
    pub fn first_before(&self, a: usize, b: usize) -> bool {
        self.seq.first(a) < self.seq.first(b)
    }
}
