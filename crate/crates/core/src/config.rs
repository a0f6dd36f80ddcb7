//! The JSON configuration block `{family, n, iota_word, lambda}`.
//!
//! `iota_word` lists the repeating word starting from position 1, so
//! `"2 1 3"` stands for `iota = (..., 3, 1, 2, 3, 1, 2)`. `lambda` maps indices
//! to multiplicities (`{"1": 1, "2": 1}` is `Lambda_1 + Lambda_2`), or is the
//! string `"inf"` for `B(infinity)`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::cartan::{AffineType, Family, Setting};
use crate::crystal::WeightSpec;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum WordSpec {
    Text(String),
    List(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LambdaSpec {
    Map(BTreeMap<String, i64>),
    Text(String),
}

impl Default for LambdaSpec {
    fn default() -> Self {
        LambdaSpec::Map(BTreeMap::new())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Config {
    pub family: String,
    pub n: usize,
    pub iota_word: WordSpec,
    #[serde(default)]
    pub lambda: LambdaSpec,
}

impl Config {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn affine_type(&self) -> Result<AffineType> {
        AffineType::new(Family::parse(&self.family)?, self.n)
    }

    pub fn word(&self) -> Result<Vec<usize>> {
        match &self.iota_word {
            WordSpec::List(v) => Ok(v.clone()),
            WordSpec::Text(t) => parse_word(t),
        }
    }

    pub fn setting(&self) -> Result<Setting> {
        Setting::new(self.affine_type()?, self.word()?)
    }

    pub fn weight(&self) -> Result<WeightSpec> {
        parse_lambda(&self.lambda, self.n)
    }
}

pub fn parse_word(text: &str) -> Result<Vec<usize>> {
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad letter '{s}' in word")))
        })
        .collect()
}

pub fn parse_lambda(spec: &LambdaSpec, n: usize) -> Result<WeightSpec> {
    match spec {
        LambdaSpec::Text(t) if matches!(t.trim(), "inf" | "infinity" | "INF") => Ok(WeightSpec::Infinity),
        LambdaSpec::Text(t) => parse_lambda_text(t, n),
        LambdaSpec::Map(m) => {
            let mut v = vec![0; n];
            for (key, &mult) in m {
                let k: usize = key
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad lambda index '{key}'")))?;
                if k == 0 || k > n {
                    return Err(Error::IndexOutOfRange { index: k, n });
                }
                if mult < 0 {
                    return Err(Error::Parse(format!("negative multiplicity for {k}")));
                }
                v[k - 1] += mult;
            }
            Ok(WeightSpec::Finite(v))
        }
    }
}

/// `k:m,k:m` pairs, e.g. `1:1,2:1`; `0` for the zero weight.
pub fn parse_lambda_text(text: &str, n: usize) -> Result<WeightSpec> {
    let t = text.trim();
    if matches!(t, "inf" | "infinity" | "INF") {
        return Ok(WeightSpec::Infinity);
    }
    let mut m = BTreeMap::new();
    if t != "0" && !t.is_empty() {
        for part in t.split(',') {
            let (k, v) = part
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("expected k:m in '{part}'")))?;
            let v: i64 = v
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad multiplicity '{v}'")))?;
            *m.entry(k.trim().to_string()).or_insert(0) += v;
        }
    }
    parse_lambda(&LambdaSpec::Map(m), n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_config() {
        let c = Config::from_json(
            r#"{"family": "A1", "n": 3, "iota_word": "2 1 3", "lambda": {"1": 1, "2": 1}}"#,
        )
        .unwrap();
        assert_eq!(c.word().unwrap(), vec![2, 1, 3]);
        assert_eq!(c.weight().unwrap(), WeightSpec::Finite(vec![1, 1, 0]));
        assert!(c.setting().is_ok());
        let c = Config::from_json(r#"{"family": "A2", "n": 3, "iota_word": [2,1,3], "lambda": "inf"}"#)
            .unwrap();
        assert_eq!(c.weight().unwrap(), WeightSpec::Infinity);
    }

    #[test]
    fn lambda_text() {
        assert_eq!(parse_lambda_text("1:2,3:1", 3).unwrap(), WeightSpec::Finite(vec![2, 0, 1]));
        assert_eq!(parse_lambda_text("0", 3).unwrap(), WeightSpec::Finite(vec![0, 0, 0]));
        assert!(parse_lambda_text("4:1", 3).is_err());
    }
}
