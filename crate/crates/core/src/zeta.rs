//! Rational functions of the form `∏ (1 − t^m)^{e_m}`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// `∏ (1 − t^m)^{e_m}`, stored as `m ↦ e_m` with no zero exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FactoredZeta {
    factors: BTreeMap<u64, i64>,
}

/// Multiplicities of cyclotomic polynomials `Φ_d`; the canonical form of a
/// [`FactoredZeta`] as a rational function.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct CyclotomicSignature(BTreeMap<u64, i64>);

impl CyclotomicSignature {
    pub fn multiplicities(&self) -> &BTreeMap<u64, i64> {
        &self.0
    }
}

fn divisors(m: u64) -> impl Iterator<Item = u64> {
    (1..=m).filter(move |d| m.is_multiple_of(*d))
}

impl FactoredZeta {
    pub fn one() -> Self {
        FactoredZeta::default()
    }

    /// `(1 − t^m)^e`.
    pub fn factor(m: u64, e: i64) -> Result<Self> {
        let mut z = FactoredZeta::one();
        z.multiply_factor(m, e)?;
        Ok(z)
    }

    /// Multiplies in place by `(1 − t^m)^e`.
    pub fn multiply_factor(&mut self, m: u64, e: i64) -> Result<()> {
        if m < 1 {
            return Err(Error::InvalidFactor(format!("base t^{m} must have m >= 1")));
        }
        let entry = self.factors.entry(m).or_insert(0);
        *entry = entry
            .checked_add(e)
            .ok_or_else(|| Error::Overflow(format!("exponent of (1-t^{m})")))?;
        if *entry == 0 {
            self.factors.remove(&m);
        }
        Ok(())
    }

    pub fn factors(&self) -> &BTreeMap<u64, i64> {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn mul(&self, other: &FactoredZeta) -> FactoredZeta {
        let mut out = self.clone();
        for (&m, &e) in &other.factors {
            out.multiply_factor(m, e).expect("keys are >= 1");
        }
        out
    }

    pub fn inv(&self) -> FactoredZeta {
        FactoredZeta {
            factors: self.factors.iter().map(|(&m, &e)| (m, -e)).collect(),
        }
    }

    pub fn pow(&self, k: i64) -> FactoredZeta {
        if k == 0 {
            return FactoredZeta::one();
        }
        FactoredZeta {
            factors: self.factors.iter().map(|(&m, &e)| (m, e * k)).collect(),
        }
    }

    /// `Σ m·e_m`: the degree of numerator minus the degree of denominator.
    pub fn degree(&self) -> i64 {
        self.factors.iter().map(|(&m, &e)| m as i64 * e).sum()
    }

    /// Uses `1 − t^m = ∏_{d | m} Φ_d(t)` up to sign.
    pub fn cyclotomic_signature(&self) -> CyclotomicSignature {
        let mut sig: BTreeMap<u64, i64> = BTreeMap::new();
        for (&m, &e) in &self.factors {
            for d in divisors(m) {
                *sig.entry(d).or_insert(0) += e;
            }
        }
        sig.retain(|_, e| *e != 0);
        CyclotomicSignature(sig)
    }

    /// Equality as rational functions in `t`.
    pub fn equals(&self, other: &FactoredZeta) -> bool {
        self.cyclotomic_signature() == other.cyclotomic_signature()
    }

    /// Power-series coefficients of `t^0 … t^order`.
    pub fn expand_series(&self, order: usize) -> Vec<BigInt> {
        let mut series = vec![BigInt::zero(); order + 1];
        series[0] = BigInt::from(1);
        for (&m, &e) in &self.factors {
            let m = m as usize;
            for _ in 0..e.unsigned_abs() {
                if e > 0 {
                    // multiply by (1 - t^m)
                    for i in (m..=order).rev() {
                        let v = series[i - m].clone();
                        series[i] -= v;
                    }
                } else {
                    // divide by (1 - t^m)
                    for i in m..=order {
                        let v = series[i - m].clone();
                        series[i] += v;
                    }
                }
            }
        }
        series
    }

    pub fn pretty(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for FactoredZeta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, (&m, &e)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if m == 1 {
                write!(f, "(1-t)")?;
            } else {
                write!(f, "(1-t^{m})")?;
            }
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for FactoredZeta {
    type Err = Error;

    /// Parses the [`Display`](fmt::Display) form, e.g. `(1-t^2) (1-t^6)^-1`.
    fn from_str(text: &str) -> Result<Self> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact == "1" {
            return Ok(FactoredZeta::one());
        }
        let bad = |why: &str| Error::InvalidFactor(format!("{why} in `{text}`"));
        let mut rest = compact.as_str();
        let mut out = FactoredZeta::one();
        if rest.is_empty() {
            return Err(bad("empty product"));
        }
        while !rest.is_empty() {
            rest = rest.strip_prefix("(1-t").ok_or_else(|| bad("expected `(1-t`"))?;
            let (m, after) = match rest.strip_prefix('^') {
                Some(r) => {
                    let end = r.find(')').ok_or_else(|| bad("missing `)`"))?;
                    let m: u64 = r[..end].parse().map_err(|_| bad("bad power of t"))?;
                    (m, &r[end..])
                }
                None => (1, rest),
            };
            rest = after.strip_prefix(')').ok_or_else(|| bad("missing `)`"))?;
            let mut e = 1i64;
            if let Some(r) = rest.strip_prefix('^') {
                let end = r
                    .char_indices()
                    .find(|&(i, c)| !(c.is_ascii_digit() || (i == 0 && c == '-')))
                    .map_or(r.len(), |(i, _)| i);
                e = r[..end].parse().map_err(|_| bad("bad exponent"))?;
                rest = &r[end..];
            }
            out.multiply_factor(m, e)?;
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct FactorJson {
    m: u64,
    e: i64,
}

#[derive(Serialize)]
struct ZetaJsonOut<'a> {
    factors: Vec<FactorJson>,
    pretty: &'a str,
    degree: i64,
}

#[derive(Deserialize)]
struct ZetaJsonIn {
    factors: Vec<FactorJson>,
}

/// `{"factors":[{"m":2,"e":1}], "pretty":"(1-t^2)", "degree":2}`
impl Serialize for FactoredZeta {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let pretty = self.to_string();
        ZetaJsonOut {
            factors: self.factors.iter().map(|(&m, &e)| FactorJson { m, e }).collect(),
            pretty: &pretty,
            degree: self.degree(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for FactoredZeta {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = ZetaJsonIn::deserialize(d)?;
        let mut z = FactoredZeta::one();
        for f in raw.factors {
            z.multiply_factor(f.m, f.e).map_err(D::Error::custom)?;
        }
        Ok(z)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn z(pairs: &[(u64, i64)]) -> FactoredZeta {
        pairs.iter().fold(FactoredZeta::one(), |acc, &(m, e)| {
            acc.mul(&FactoredZeta::factor(m, e).unwrap())
        })
    }

    fn sig(pairs: &[(u64, i64)]) -> CyclotomicSignature {
        CyclotomicSignature(pairs.iter().copied().collect())
    }

    #[test]
    fn algebra_basics() {
        assert!(z(&[(2, 1), (2, -1)]).is_one());
        assert!(FactoredZeta::factor(0, 1).is_err());
        let a = z(&[(3, 2), (5, -1)]);
        assert_eq!(a.inv().inv(), a);
        assert_eq!(a.pow(3), z(&[(3, 6), (5, -3)]));
        assert!(a.pow(0).is_one());
    }

    #[test]
    fn degrees() {
        assert_eq!(z(&[(1, 2)]).degree(), 2);
        assert_eq!(z(&[(2, 1), (3, 1), (6, -1)]).degree(), -1);
        assert_eq!(FactoredZeta::one().degree(), 0);
    }

    #[test]
    fn signatures() {
        assert_eq!(z(&[(6, 1)]).cyclotomic_signature(), sig(&[(1, 1), (2, 1), (3, 1), (6, 1)]));
        assert_eq!(z(&[(2, 1), (3, 1), (6, -1)]).cyclotomic_signature(), sig(&[(1, 1), (6, -1)]));
        assert_eq!(FactoredZeta::one().cyclotomic_signature(), sig(&[]));
    }

    #[test]
    fn equality() {
        let quotient = z(&[(2, 1), (1, -1)]);
        assert_eq!(quotient.cyclotomic_signature(), sig(&[(2, 1)]));
        assert!(!quotient.equals(&z(&[(1, 1)])));
        let a = z(&[(4, 1), (2, -3)]);
        assert!(a.equals(&a.mul(&FactoredZeta::one())));
    }

    #[test]
    fn series() {
        let one = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert_eq!(z(&[(1, -1)]).expand_series(3), one(&[1, 1, 1, 1]));
        assert_eq!(z(&[(2, 1)]).expand_series(3), one(&[1, 0, -1, 0]));
        assert_eq!(FactoredZeta::one().expand_series(0), one(&[1]));
    }

    #[test]
    fn pretty_forms() {
        assert_eq!(z(&[(6, -1), (2, 1)]).to_string(), "(1-t^2) (1-t^6)^-1");
        assert_eq!(FactoredZeta::one().to_string(), "1");
        assert_eq!(z(&[(1, 2)]).to_string(), "(1-t)^2");
        assert_eq!("(1-t^2) (1-t^6)^-1".parse::<FactoredZeta>().unwrap(), z(&[(2, 1), (6, -1)]));
        assert_eq!("(1-t)(1-t)".parse::<FactoredZeta>().unwrap(), z(&[(1, 2)]));
        assert!("(1+t)".parse::<FactoredZeta>().is_err());
        assert!("(1-t^0)".parse::<FactoredZeta>().is_err());
        assert!("".parse::<FactoredZeta>().is_err());
    }

    #[test]
    fn json_shape() {
        let a = z(&[(2, 1), (6, -1)]);
        let v = serde_json::to_value(&a).unwrap();
        assert_eq!(
            v,
            serde_json::json!({"factors":[{"m":2,"e":1},{"m":6,"e":-1}], "pretty":"(1-t^2) (1-t^6)^-1", "degree":-4})
        );
        let back: FactoredZeta = serde_json::from_value(v).unwrap();
        assert_eq!(back, a);
    }

    fn arb_zeta() -> impl Strategy<Value = FactoredZeta> {
        prop::collection::vec((1u64..13, -3i64..4), 0..6).prop_map(|v| z(&v))
    }

    fn convolve(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        (0..a.len())
            .map(|i| (0..=i).map(|j| &a[j] * &b[i - j]).sum())
            .collect()
    }

    proptest! {
        #[test]
        fn degree_is_additive(a in arb_zeta(), b in arb_zeta()) {
            prop_assert_eq!(a.mul(&b).degree(), a.degree() + b.degree());
            prop_assert_eq!(a.inv().degree(), -a.degree());
        }

        #[test]
        fn signature_is_additive(a in arb_zeta(), b in arb_zeta()) {
            let mut sum = a.cyclotomic_signature().0;
            for (d, e) in b.cyclotomic_signature().0 {
                *sum.entry(d).or_insert(0) += e;
            }
            sum.retain(|_, e| *e != 0);
            prop_assert_eq!(a.mul(&b).cyclotomic_signature().0, sum);
        }

        #[test]
        fn expansion_is_multiplicative(a in arb_zeta(), b in arb_zeta()) {
            let n = 30;
            prop_assert_eq!(a.mul(&b).expand_series(n), convolve(&a.expand_series(n), &b.expand_series(n)));
        }

        #[test]
        fn equality_agrees_with_series(a in arb_zeta(), b in arb_zeta()) {
            // a = b iff N_a·D_b = N_b·D_a; both sides have degree below 450
            // here, so agreement up to t^450 decides it.
            prop_assert_eq!(a.equals(&b), a.expand_series(450) == b.expand_series(450));
        }

        #[test]
        fn pretty_round_trips(a in arb_zeta()) {
            prop_assert_eq!(a.to_string().parse::<FactoredZeta>().unwrap(), a);
        }
    }
}
