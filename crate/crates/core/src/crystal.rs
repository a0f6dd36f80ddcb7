//! The crystal structure on `Z^inf_iota[lambda]`.

use serde::{Deserialize, Serialize};

use crate::cartan::Setting;
use crate::form::ZVector;

/// A dominant weight by its values `<h_k, lambda>`, or the B(infinity) mode.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum WeightSpec {
    Finite(Vec<i64>),
    Infinity,
}

impl WeightSpec {
    pub fn zero(n: usize) -> Self {
        WeightSpec::Finite(vec![0; n])
    }

    /// `Lambda_k`.
    pub fn fundamental(n: usize, k: usize) -> Self {
        let mut v = vec![0; n];
        v[k - 1] = 1;
        WeightSpec::Finite(v)
    }

    pub fn from_pairs(n: usize, pairs: &[(usize, i64)]) -> Self {
        let mut v = vec![0; n];
        for &(k, m) in pairs {
            v[k - 1] += m;
        }
        WeightSpec::Finite(v)
    }

    /// `<h_k, lambda>`, `None` in B(infinity) mode.
    pub fn h(&self, k: usize) -> Option<i64> {
        match self {
            WeightSpec::Finite(v) => Some(v[k - 1]),
            WeightSpec::Infinity => None,
        }
    }

    pub fn is_dominant(&self) -> bool {
        match self {
            WeightSpec::Finite(v) => v.iter().all(|&m| m >= 0),
            WeightSpec::Infinity => true,
        }
    }

    pub fn finite(&self) -> Option<&[i64]> {
        match self {
            WeightSpec::Finite(v) => Some(v),
            WeightSpec::Infinity => None,
        }
    }

    pub fn label(&self) -> String {
        match self {
            WeightSpec::Infinity => "inf".into(),
            WeightSpec::Finite(v) => {
                let parts: Vec<String> = v
                    .iter()
                    .enumerate()
                    .filter(|(_, &m)| m != 0)
                    .map(|(i, &m)| {
                        if m == 1 {
                            format!("L{}", i + 1)
                        } else {
                            format!("{m}L{}", i + 1)
                        }
                    })
                    .collect();
                if parts.is_empty() {
                    "0".into()
                } else {
                    parts.join("+")
                }
            }
        }
    }
}

/// `wt = sum_i lambda_i Lambda_i + sum_i alpha_i alpha_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight {
    pub lambda: Vec<i64>,
    pub alpha: Vec<i64>,
}

/// `sigma^(k)` together with the extreme points of `M^(k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SigmaMax {
    pub value: i64,
    pub first: usize,
    pub last: usize,
}

#[derive(Clone, Debug)]
pub struct Crystal<'a> {
    pub setting: &'a Setting,
    pub lambda: WeightSpec,
}

impl<'a> Crystal<'a> {
    pub fn new(setting: &'a Setting, lambda: WeightSpec) -> Self {
        Crystal { setting, lambda }
    }

    pub fn infinity(setting: &'a Setting) -> Self {
        Crystal::new(setting, WeightSpec::Infinity)
    }

    fn a(&self, i: usize, j: usize) -> i64 {
        self.setting.cartan.get(i, j)
    }

    /// `sigma_r(a) = a_r + sum_{j>r} a_{i_r,i_j} a_j`.
    pub fn sigma_r(&self, a: &ZVector, r: usize) -> i64 {
        let ir = self.setting.seq.color(r);
        let mut v = a.get(r);
        for (j, x) in a.iter() {
            if j > r {
                v += self.a(ir, self.setting.seq.color(j)) * x;
            }
        }
        v
    }

    /// `sigma_0^(k)`, `None` standing for minus infinity.
    pub fn sigma0(&self, a: &ZVector, k: usize) -> Option<i64> {
        let h = self.lambda.h(k)?;
        let mut v = -h;
        for (j, x) in a.iter() {
            v += self.a(k, self.setting.seq.color(j)) * x;
        }
        Some(v)
    }

    /// Scans positions up to `max support + period`; past that every
    /// `sigma_r` vanishes, and each colour has a position in the scanned tail.
    pub fn sigma_max(&self, a: &ZVector, k: usize) -> SigmaMax {
        let seq = &self.setting.seq;
        let n = self.setting.n();
        let top = a.max_pos() + seq.period();
        let mut tail = vec![0i64; n + 1];
        let mut best: Option<SigmaMax> = None;
        for r in (1..=top).rev() {
            let ir = seq.color(r);
            if ir == k {
                let mut v = a.get(r);
                for (c, &t) in tail.iter().enumerate().skip(1) {
                    if t != 0 {
                        v += self.a(k, c) * t;
                    }
                }
                best = Some(match best {
                    None => SigmaMax {
                        value: v,
                        first: r,
                        last: r,
                    },
                    Some(b) if v > b.value => SigmaMax {
                        value: v,
                        first: r,
                        last: r,
                    },
                    Some(b) if v == b.value => SigmaMax { first: r, ..b },
                    Some(b) => b,
                });
            }
            tail[ir] += a.get(r);
        }
        best.expect("every colour occurs in one period")
    }

    pub fn f(&self, k: usize, a: &ZVector) -> Option<ZVector> {
        let m = self.sigma_max(a, k);
        if let Some(s0) = self.sigma0(a, k) {
            if m.value <= s0 {
                return None;
            }
        }
        let mut b = a.clone();
        b.add(m.first, 1);
        Some(b)
    }

    pub fn e(&self, k: usize, a: &ZVector) -> Option<ZVector> {
        let m = self.sigma_max(a, k);
        if m.value <= 0 {
            return None;
        }
        if let Some(s0) = self.sigma0(a, k) {
            if m.value < s0 {
                return None;
            }
        }
        let mut b = a.clone();
        b.add(m.last, -1);
        Some(b)
    }

    pub fn wt(&self, a: &ZVector) -> Weight {
        let n = self.setting.n();
        let lambda = match &self.lambda {
            WeightSpec::Finite(v) => v.clone(),
            WeightSpec::Infinity => vec![0; n],
        };
        let mut alpha = vec![0; n];
        for (r, x) in a.iter() {
            alpha[self.setting.seq.color(r) - 1] -= x;
        }
        Weight { lambda, alpha }
    }

    /// `<h_k, wt(a)>`.
    pub fn pair(&self, k: usize, w: &Weight) -> i64 {
        let mut v = w.lambda[k - 1];
        for (i, &c) in w.alpha.iter().enumerate() {
            v += c * self.a(k, i + 1);
        }
        v
    }

    pub fn epsilon(&self, k: usize, a: &ZVector) -> i64 {
        let s = self.sigma_max(a, k).value;
        match self.sigma0(a, k) {
            Some(s0) => s.max(s0),
            None => s,
        }
    }

    pub fn phi(&self, k: usize, a: &ZVector) -> i64 {
        self.pair(k, &self.wt(a)) + self.epsilon(k, a)
    }

    /// Applies `f_{word[0]}` first, then `f_{word[1]}`, and so on.
    pub fn apply_word(&self, word: &[usize], a: &ZVector) -> Option<ZVector> {
        let mut cur = a.clone();
        for &k in word {
            cur = self.f(k, &cur)?;
        }
        Some(cur)
    }
}
