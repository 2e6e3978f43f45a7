//! Normalized quotients of multivariate Laurent polynomials.
//!
//! A [`RatFun`] keeps `num/den` in a canonical form: the pair is coprime,
//! the denominator is integer-primitive with min exponent zero per variable
//! and a positive leading coefficient, so all rational and monomial units
//! live in the numerator. Structural equality is then mathematical equality.
//!
//! Addition and multiplication reduce via small gcds on the parts that can
//! actually share factors instead of one big gcd on the products.

use std::collections::HashMap;
use std::fmt;

use num::rational::BigRational;
use num::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::laurent::MultiLaurent;
use super::sym::Sym;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFun {
    num: MultiLaurent,
    den: MultiLaurent,
}

impl Default for RatFun {
    fn default() -> Self {
        RatFun::zero()
    }
}

impl From<MultiLaurent> for RatFun {
    fn from(p: MultiLaurent) -> Self {
        RatFun { num: p, den: MultiLaurent::one() }
    }
}

impl RatFun {
    pub fn zero() -> Self {
        MultiLaurent::zero().into()
    }

    pub fn one() -> Self {
        MultiLaurent::one().into()
    }

    pub fn int(n: i64) -> Self {
        MultiLaurent::int(n).into()
    }

    pub fn rational(c: BigRational) -> Self {
        MultiLaurent::constant(c).into()
    }

    pub fn var(s: Sym) -> Self {
        MultiLaurent::var(s).into()
    }

    /// Monomial `s^(e/2)` for a half-unit exponent `e`.
    pub fn half_power(s: Sym, e: i32) -> Self {
        MultiLaurent::monomial(BigRational::one(), &[(s, e)]).into()
    }

    pub fn monomial(coeff: BigRational, pows: &[(Sym, i32)]) -> Self {
        MultiLaurent::monomial(coeff, pows).into()
    }

    pub fn new(num: MultiLaurent, den: MultiLaurent) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: MultiLaurent, den: MultiLaurent) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self::zero();
        }
        let (mut num, mut den) = (num, den);
        if !den.is_constant() && !den.is_monomial() {
            let g = num.gcd(&den);
            if !g.is_one() {
                num = num.exact_div(&g).expect("gcd divides numerator");
                den = den.exact_div(&g).expect("gcd divides denominator");
            }
        }
        let (r, mono, den_c) = den.unit_normal();
        let inv: Vec<(Sym, i32)> = mono.iter().map(|&(s, e)| (s, -e)).collect();
        let num = num.scale(&r.recip()).mul(&MultiLaurent::monomial(BigRational::one(), &inv));
        RatFun { num, den: den_c }
    }

    pub fn num(&self) -> &MultiLaurent {
        &self.num
    }

    pub fn den(&self) -> &MultiLaurent {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    /// The underlying polynomial when the denominator is one.
    pub fn as_laurent(&self) -> Option<&MultiLaurent> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        self.as_laurent().and_then(|p| p.as_rational())
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return Self::normalized(self.num.add(&other.num), self.den.clone());
        }
        let g = self.den.gcd(&other.den);
        if g.is_one() {
            let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
            let den = self.den.mul(&other.den);
            // Coprime denominators: no reduction possible beyond units.
            let (r, mono, den_c) = den.unit_normal();
            let inv: Vec<(Sym, i32)> = mono.iter().map(|&(s, e)| (s, -e)).collect();
            let num =
                num.scale(&r.recip()).mul(&MultiLaurent::monomial(BigRational::one(), &inv));
            return RatFun { num, den: den_c };
        }
        let bd = self.den.exact_div(&g).expect("gcd divides");
        let dd = other.den.exact_div(&g).expect("gcd divides");
        let num = self.num.mul(&dd).add(&other.num.mul(&bd));
        // Any common factor of num and bd*other.den sits inside g.
        let h = num.gcd(&g);
        if h.is_one() {
            Self::normalized_coprime(num, bd.mul(&other.den))
        } else {
            let num = num.exact_div(&h).expect("gcd divides");
            let den = bd.mul(&other.den.exact_div(&h).expect("gcd divides"));
            Self::normalized_coprime(num, den)
        }
    }

    /// Unit-normalizes a pair already known coprime.
    fn normalized_coprime(num: MultiLaurent, den: MultiLaurent) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (r, mono, den_c) = den.unit_normal();
        let inv: Vec<(Sym, i32)> = mono.iter().map(|&(s, e)| (s, -e)).collect();
        let num = num.scale(&r.recip()).mul(&MultiLaurent::monomial(BigRational::one(), &inv));
        RatFun { num, den: den_c }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RatFun { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let a = if g1.is_one() {
            self.num.clone()
        } else {
            self.num.exact_div(&g1).expect("gcd divides")
        };
        let d = if g1.is_one() {
            other.den.clone()
        } else {
            other.den.exact_div(&g1).expect("gcd divides")
        };
        let c = if g2.is_one() {
            other.num.clone()
        } else {
            other.num.exact_div(&g2).expect("gcd divides")
        };
        let b = if g2.is_one() {
            self.den.clone()
        } else {
            self.den.exact_div(&g2).expect("gcd divides")
        };
        Self::normalized_coprime(a.mul(&c), b.mul(&d))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.recip()?))
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized_coprime(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, n: i32) -> Result<Self> {
        if n < 0 {
            return self.recip()?.pow(-n);
        }
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut k = n as u32;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        Ok(acc)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFun { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Square root of a monomial rational function, when one exists in the
    /// half-unit exponent ring (even exponents, coefficient `1`).
    fn sqrt_monomial(&self) -> Result<Self> {
        let p = self
            .as_laurent()
            .ok_or_else(|| Error::NoSquareRoot(self.to_string()))?;
        if !p.is_monomial() {
            return Err(Error::NoSquareRoot(self.to_string()));
        }
        let (m, c) = p.leading().unwrap();
        if !c.is_one() {
            return Err(Error::NoSquareRoot(self.to_string()));
        }
        let mut pows = Vec::new();
        for (s, &e) in p.vars().iter().zip(m.0.iter()) {
            if e % 2 != 0 {
                return Err(Error::NoSquareRoot(self.to_string()));
            }
            pows.push((*s, e / 2));
        }
        Ok(Self::monomial(BigRational::one(), &pows))
    }

    /// Image of a Laurent polynomial under the ring homomorphism extending
    /// the given symbol bindings; unbound symbols map to themselves.
    pub fn subst_laurent(p: &MultiLaurent, bindings: &[(Sym, RatFun)]) -> Result<RatFun> {
        let bound: HashMap<Sym, &RatFun> = bindings.iter().map(|(s, r)| (*s, r)).collect();
        if !p.vars().iter().any(|v| bound.contains_key(v)) {
            return Ok(p.clone().into());
        }
        let mut pow_cache: HashMap<(Sym, i32), RatFun> = HashMap::new();
        let mut acc = RatFun::zero();
        let vars = p.vars().to_vec();
        for (m, c) in p.terms() {
            let mut term = RatFun::rational(c.clone());
            let mut untouched: Vec<(Sym, i32)> = Vec::new();
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let s = vars[i];
                match bound.get(&s) {
                    None => untouched.push((s, e)),
                    Some(r) => {
                        let key = (s, e);
                        let val = match pow_cache.get(&key) {
                            Some(v) => v.clone(),
                            None => {
                                let v = if e % 2 == 0 {
                                    if e < 0 && r.is_zero() {
                                        return Err(Error::SubstitutionDenominatorVanishes);
                                    }
                                    r.pow(e / 2)?
                                } else {
                                    let root = r.sqrt_monomial()?;
                                    root.pow(e)?
                                };
                                pow_cache.insert(key, v.clone());
                                v
                            }
                        };
                        term = term.mul(&val);
                    }
                }
            }
            if !untouched.is_empty() {
                term = term.mul(&RatFun::monomial(BigRational::one(), &untouched));
            }
            acc = acc.add(&term);
        }
        Ok(acc)
    }

    /// Exact image under the ring homomorphism extending the bindings.
    pub fn substitute(&self, bindings: &[(Sym, RatFun)]) -> Result<RatFun> {
        let num = Self::subst_laurent(&self.num, bindings)?;
        let den = Self::subst_laurent(&self.den, bindings)?;
        if den.is_zero() {
            return Err(Error::SubstitutionDenominatorVanishes);
        }
        num.div(&den)
    }

    /// All symbols occurring in the numerator or denominator.
    pub fn vars(&self) -> Vec<Sym> {
        MultiLaurent::merged_vars(&self.num, &self.den)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let vars = self.vars();
        let names: Vec<String> = vars.iter().map(|v| v.name()).collect();
        serde_json::json!({
            "vars": names,
            "num": laurent_terms_json(&self.num, &vars),
            "den": laurent_terms_json(&self.den, &vars),
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let vars = v
            .get("vars")
            .and_then(|x| x.as_array())
            .ok_or_else(|| Error::Json("missing vars".into()))?;
        let syms: Vec<Sym> = vars
            .iter()
            .map(|n| {
                n.as_str()
                    .and_then(Sym::parse)
                    .ok_or_else(|| Error::Json(format!("bad symbol {n}")))
            })
            .collect::<Result<_>>()?;
        let num = laurent_terms_from_json(
            v.get("num").ok_or_else(|| Error::Json("missing num".into()))?,
            &syms,
        )?;
        let den = laurent_terms_from_json(
            v.get("den").ok_or_else(|| Error::Json("missing den".into()))?,
            &syms,
        )?;
        Self::new(num, den)
    }
}

fn laurent_terms_json(p: &MultiLaurent, vars: &[Sym]) -> serde_json::Value {
    let aligned = p.with_vars(vars);
    let mut terms: Vec<serde_json::Value> = Vec::new();
    let mut entries: Vec<_> = aligned.terms().collect();
    entries.reverse(); // descending canonical order
    for (m, c) in entries {
        terms.push(serde_json::json!({
            "e": m.0.to_vec(),
            "c": c.to_string(),
        }));
    }
    serde_json::Value::Array(terms)
}

fn laurent_terms_from_json(v: &serde_json::Value, vars: &[Sym]) -> Result<MultiLaurent> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Json("terms must be an array".into()))?;
    let mut acc = MultiLaurent::zero();
    for t in arr {
        let e = t
            .get("e")
            .and_then(|x| x.as_array())
            .ok_or_else(|| Error::Json("missing e".into()))?;
        if e.len() != vars.len() {
            return Err(Error::Json("exponent arity mismatch".into()));
        }
        let c = t
            .get("c")
            .and_then(|x| x.as_str())
            .ok_or_else(|| Error::Json("missing c".into()))?;
        let coeff: BigRational = c
            .parse()
            .map_err(|_| Error::Json(format!("bad rational {c}")))?;
        let pows: Vec<(Sym, i32)> = vars
            .iter()
            .zip(e.iter())
            .map(|(s, x)| {
                x.as_i64()
                    .map(|k| (*s, k as i32))
                    .ok_or_else(|| Error::Json("bad exponent".into()))
            })
            .collect::<Result<_>>()?;
        acc = acc.add(&MultiLaurent::monomial(coeff, &pows));
    }
    Ok(acc)
}

impl Serialize for RatFun {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RatFun {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(deserializer)?;
        RatFun::from_json(&v).map_err(D::Error::custom)
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

/// Arithmetic entry point used by the CLI: `a op b`.
pub fn ratfun_arith(a: &RatFun, b: &RatFun, op: &str) -> Result<RatFun> {
    match op {
        "add" => Ok(a.add(b)),
        "sub" => Ok(a.sub(b)),
        "mul" => Ok(a.mul(b)),
        "div" => a.div(b),
        other => Err(Error::Json(format!("unknown operation {other}"))),
    }
}
