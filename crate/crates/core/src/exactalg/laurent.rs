//! Sparse multivariate Laurent polynomials over arbitrary-precision rationals.
//!
//! Exponents are stored in half units (see [`crate::exactalg::sym`]), may be
//! negative, and every polynomial keeps its variable list trimmed to the
//! symbols that actually occur, so structural equality is mathematical
//! equality. The term order is graded lexicographic over the canonical
//! symbol order; it fixes leading terms, sign normalization and the JSON
//! serialization order.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use smallvec::SmallVec;

use super::sym::Sym;

/// Exponent vector in half units, one entry per variable of the owning
/// polynomial. Ordered graded-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mono(pub SmallVec<[i32; 8]>);

impl Mono {
    fn total(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.0.len(), other.0.len());
        match self.total().cmp(&other.total()) {
            Ordering::Equal => self.0.cmp(&other.0),
            ord => ord,
        }
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A sparse multivariate Laurent polynomial with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct MultiLaurent {
    vars: Vec<Sym>,
    terms: BTreeMap<Mono, BigRational>,
}

#[allow(dead_code)]
pub(crate) fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl MultiLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::int(1)
    }

    pub fn int(n: i64) -> Self {
        Self::constant(BigRational::from(BigInt::from(n)))
    }

    pub fn constant(c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono(SmallVec::new()), c);
        }
        MultiLaurent { vars: vec![], terms }
    }

    /// The symbol as a first power (exponent `2` in half units).
    pub fn var(s: Sym) -> Self {
        Self::monomial(BigRational::one(), &[(s, 2)])
    }

    /// A monomial from `(symbol, half-unit exponent)` pairs.
    pub fn monomial(coeff: BigRational, pows: &[(Sym, i32)]) -> Self {
        if coeff.is_zero() {
            return Self::zero();
        }
        let mut pairs: Vec<(Sym, i32)> = pows.iter().copied().filter(|&(_, e)| e != 0).collect();
        pairs.sort_by_key(|&(s, _)| s);
        let mut vars = Vec::with_capacity(pairs.len());
        let mut exps = SmallVec::new();
        for (s, e) in pairs {
            if vars.last() == Some(&s) {
                let last = exps.last_mut().unwrap();
                *last += e;
            } else {
                vars.push(s);
                exps.push(e);
            }
        }
        let mut out = MultiLaurent { vars, terms: BTreeMap::new() };
        out.terms.insert(Mono(exps), coeff);
        out.trim_vars();
        out
    }

    pub fn vars(&self) -> &[Sym] {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().map_or(false, |c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.as_rational().is_some()
    }

    /// The value if the polynomial is a constant.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.terms.is_empty() {
            return Some(BigRational::zero());
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if m.is_zero() {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Leading (maximal) term under the canonical order.
    pub fn leading(&self) -> Option<(&Mono, &BigRational)> {
        self.terms.iter().next_back()
    }

    fn trim_vars(&mut self) {
        if self.terms.is_empty() {
            self.vars.clear();
            return;
        }
        let n = self.vars.len();
        let mut used = vec![false; n];
        for m in self.terms.keys() {
            for (i, &e) in m.0.iter().enumerate() {
                if e != 0 {
                    used[i] = true;
                }
            }
        }
        if used.iter().all(|&u| u) {
            return;
        }
        let keep: Vec<usize> = (0..n).filter(|&i| used[i]).collect();
        self.vars = keep.iter().map(|&i| self.vars[i]).collect();
        let old = std::mem::take(&mut self.terms);
        for (m, c) in old {
            let exps: SmallVec<[i32; 8]> = keep.iter().map(|&i| m.0[i]).collect();
            self.terms.insert(Mono(exps), c);
        }
    }

    /// Re-expresses the polynomial over a superset of its variables.
    pub(crate) fn with_vars(&self, vars: &[Sym]) -> Self {
        if self.vars == vars {
            return self.clone();
        }
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v).expect("var superset"))
            .collect();
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut exps: SmallVec<[i32; 8]> = SmallVec::from_elem(0, vars.len());
            for (i, &e) in m.0.iter().enumerate() {
                exps[map[i]] = e;
            }
            terms.insert(Mono(exps), c.clone());
        }
        MultiLaurent { vars: vars.to_vec(), terms }
    }

    pub(crate) fn merged_vars(a: &Self, b: &Self) -> Vec<Sym> {
        let mut vars: Vec<Sym> = a.vars.iter().chain(b.vars.iter()).copied().collect();
        vars.sort();
        vars.dedup();
        vars
    }

    pub fn add(&self, other: &Self) -> Self {
        let vars = Self::merged_vars(self, other);
        let mut a = self.with_vars(&vars);
        let b = other.with_vars(&vars);
        for (m, c) in b.terms {
            match a.terms.entry(m) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(c);
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    *e.get_mut() += c;
                    if e.get().is_zero() {
                        e.remove();
                    }
                }
            }
        }
        a.trim_vars();
        a
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if let Some(c) = other.as_rational() {
            return self.scale(&c);
        }
        if let Some(c) = self.as_rational() {
            return other.scale(&c);
        }
        let vars = Self::merged_vars(self, other);
        let a = self.with_vars(&vars);
        let b = other.with_vars(&vars);
        let mut terms: BTreeMap<Mono, BigRational> = BTreeMap::new();
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                let exps: SmallVec<[i32; 8]> =
                    ma.0.iter().zip(mb.0.iter()).map(|(x, y)| x + y).collect();
                let c = ca * cb;
                match terms.entry(Mono(exps)) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        *e.get_mut() += c;
                        if e.get().is_zero() {
                            e.remove();
                        }
                    }
                }
            }
        }
        let mut out = MultiLaurent { vars, terms };
        out.trim_vars();
        out
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v *= c;
        }
        out
    }

    /// Multiplies by a single monomial given in half-unit exponents.
    pub fn mul_monomial(&self, coeff: &BigRational, pows: &[(Sym, i32)]) -> Self {
        self.mul(&Self::monomial(coeff.clone(), pows))
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Maximum half-unit exponent of `s`, or `None` for the zero polynomial.
    pub fn max_exp(&self, s: Sym) -> Option<i32> {
        let i = self.vars.iter().position(|v| *v == s);
        if self.is_zero() {
            return None;
        }
        match i {
            None => Some(0),
            Some(i) => self.terms.keys().map(|m| m.0[i]).max(),
        }
    }

    /// Minimum half-unit exponent of `s`, or `None` for the zero polynomial.
    pub fn min_exp(&self, s: Sym) -> Option<i32> {
        let i = self.vars.iter().position(|v| *v == s);
        if self.is_zero() {
            return None;
        }
        match i {
            None => Some(0),
            Some(i) => self.terms.keys().map(|m| m.0[i]).min(),
        }
    }

    /// Collects the polynomial by half-unit powers of `s`.
    pub fn collect(&self, s: Sym) -> Vec<(i32, MultiLaurent)> {
        let Some(i) = self.vars.iter().position(|v| *v == s) else {
            if self.is_zero() {
                return vec![];
            }
            return vec![(0, self.clone())];
        };
        let mut buckets: BTreeMap<i32, MultiLaurent> = BTreeMap::new();
        let rest: Vec<Sym> = self.vars.iter().copied().filter(|v| *v != s).collect();
        for (m, c) in &self.terms {
            let e = m.0[i];
            let exps: SmallVec<[i32; 8]> = m
                .0
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &x)| x)
                .collect();
            let entry = buckets.entry(e).or_insert_with(|| MultiLaurent {
                vars: rest.clone(),
                terms: BTreeMap::new(),
            });
            entry.terms.insert(Mono(exps), c.clone());
        }
        buckets
            .into_iter()
            .map(|(e, mut p)| {
                p.trim_vars();
                (e, p)
            })
            .collect()
    }

    /// Coefficient of `s^(e/2)` (half-unit exponent `e`).
    pub fn coefficient_of(&self, s: Sym, e: i32) -> MultiLaurent {
        self.collect(s)
            .into_iter()
            .find(|(k, _)| *k == e)
            .map(|(_, p)| p)
            .unwrap_or_else(MultiLaurent::zero)
    }

    /// Rebuilds from a half-unit power collection in `s`.
    pub fn assemble(s: Sym, parts: &[(i32, MultiLaurent)]) -> Self {
        let mut acc = Self::zero();
        for (e, p) in parts {
            acc = acc.add(&p.mul(&Self::monomial(BigRational::one(), &[(s, *e)])));
        }
        acc
    }

    /// Substitutes `var -> factor * var`, where `factor` is a monomial in
    /// half-unit exponents. Requires all exponents of `var` to be even
    /// (integer powers).
    pub fn scale_var(&self, var: Sym, factor: &[(Sym, i32)]) -> Self {
        let mut acc = Self::zero();
        for (e, p) in self.collect(var) {
            assert!(e % 2 == 0, "scale_var requires integer powers of {var}");
            let k = e / 2;
            let shifted: Vec<(Sym, i32)> = factor
                .iter()
                .map(|&(s, f)| (s, f * k))
                .chain(std::iter::once((var, e)))
                .collect();
            acc = acc.add(&p.mul(&Self::monomial(BigRational::one(), &shifted)));
        }
        acc
    }

    /// Applies an exponent-vector transformation term by term.
    pub fn remap_exponents<F>(&self, f: F) -> Self
    where
        F: Fn(&[Sym], &[i32]) -> Vec<(Sym, i32)>,
    {
        let mut acc = Self::zero();
        for (m, c) in &self.terms {
            let pows = f(&self.vars, &m.0);
            acc = acc.add(&Self::monomial(c.clone(), &pows));
        }
        acc
    }

    /// Total degree bounds `(min, max)` in half units over all variables.
    pub fn total_degree_range(&self) -> Option<(i64, i64)> {
        if self.is_zero() {
            return None;
        }
        let mut lo = i64::MAX;
        let mut hi = i64::MIN;
        for m in self.terms.keys() {
            let t = m.total();
            lo = lo.min(t);
            hi = hi.max(t);
        }
        Some((lo, hi))
    }

    /// Rational content: positive `r` with `self = r * (integer-primitive)`,
    /// carrying the sign of the leading coefficient.
    pub fn content_rational(&self) -> BigRational {
        if self.is_zero() {
            return BigRational::zero();
        }
        let mut gnum = BigInt::zero();
        let mut lden = BigInt::one();
        for c in self.terms.values() {
            gnum = num::integer::gcd(gnum, c.numer().clone());
            lden = num::integer::lcm(lden, c.denom().clone());
        }
        let mut r = BigRational::new(gnum, lden);
        if self.leading().unwrap().1.is_negative() {
            r = -r;
        }
        r
    }

    /// Per-variable minimum exponents as a monomial factor.
    pub fn monomial_content(&self) -> Vec<(Sym, i32)> {
        self.vars
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, self.terms.keys().map(|m| m.0[i]).min().unwrap_or(0)))
            .collect()
    }

    /// Splits into `(rational unit, monomial unit, canonical part)` with the
    /// canonical part integer-primitive, min-exponent zero in each variable,
    /// and positive leading coefficient.
    pub fn unit_normal(&self) -> (BigRational, Vec<(Sym, i32)>, MultiLaurent) {
        if self.is_zero() {
            return (BigRational::zero(), vec![], MultiLaurent::zero());
        }
        let mono = self.monomial_content();
        let inv: Vec<(Sym, i32)> = mono.iter().map(|&(s, e)| (s, -e)).collect();
        let shifted = self.mul(&Self::monomial(BigRational::one(), &inv));
        let r = shifted.content_rational();
        let canon = shifted.scale(&r.recip());
        (r, mono, canon)
    }

    /// Exact division; `None` when `other` does not divide `self`.
    pub fn exact_div(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some(c) = other.as_rational() {
            return Some(self.scale(&c.recip()));
        }
        if other.is_monomial() {
            let (m, c) = other.leading().unwrap();
            let inv: Vec<(Sym, i32)> = other
                .vars
                .iter()
                .zip(m.0.iter())
                .map(|(&s, &e)| (s, -e))
                .collect();
            return Some(self.mul(&Self::monomial(c.recip(), &inv)));
        }
        let vars = Self::merged_vars(self, other);
        let a = self.with_vars(&vars);
        let b = other.with_vars(&vars);
        // Shift both to min exponent zero; Laurent divisibility then equals
        // polynomial divisibility and the quotient picks up the net shift.
        let ma = a.monomial_content();
        let mb = b.monomial_content();
        let a0 = a.mul(&Self::monomial(
            BigRational::one(),
            &ma.iter().map(|&(s, e)| (s, -e)).collect::<Vec<_>>(),
        ));
        let b0 = b.mul(&Self::monomial(
            BigRational::one(),
            &mb.iter().map(|&(s, e)| (s, -e)).collect::<Vec<_>>(),
        ));
        let q0 = Self::poly_exact_div(&a0, &b0)?;
        let shift: Vec<(Sym, i32)> = ma
            .iter()
            .zip(mb.iter())
            .map(|(&(s, ea), &(_, eb))| (s, ea - eb))
            .collect();
        Some(q0.mul(&Self::monomial(BigRational::one(), &shift)))
    }

    /// Exact division of min-exponent-zero polynomials over identical vars.
    fn poly_exact_div(a: &Self, b: &Self) -> Option<Self> {
        let vars = Self::merged_vars(a, b);
        let mut rem = a.with_vars(&vars);
        let b = b.with_vars(&vars);
        let (bm, bc) = b.leading().map(|(m, c)| (m.clone(), c.clone()))?;
        let mut quo = MultiLaurent { vars: vars.clone(), terms: BTreeMap::new() };
        while !rem.is_zero() {
            let (rm, rc) = rem.leading().map(|(m, c)| (m.clone(), c.clone()))?;
            let exps: SmallVec<[i32; 8]> = rm
                .0
                .iter()
                .zip(bm.0.iter())
                .map(|(x, y)| x - y)
                .collect();
            if exps.iter().any(|&e| e < 0) {
                return None;
            }
            let qc = rc / &bc;
            let qterm = MultiLaurent {
                vars: vars.clone(),
                terms: [(Mono(exps.clone()), qc.clone())].into_iter().collect(),
            };
            // Subtraction trims unused variables; realign to keep monomial
            // arities consistent with `b`.
            rem = rem.sub(&qterm.mul(&b)).with_vars(&vars);
            match quo.terms.entry(Mono(exps)) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(qc);
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    *e.get_mut() += qc;
                    if e.get().is_zero() {
                        e.remove();
                    }
                }
            }
        }
        quo.trim_vars();
        Some(quo)
    }

    /// Greatest common divisor, canonicalized to min-exponent zero,
    /// integer-primitive, positive leading coefficient. Monomials are units
    /// of the Laurent ring, so any monomial input yields `1`.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.unit_normal().2;
        }
        if other.is_zero() {
            return self.unit_normal().2;
        }
        let a = self.unit_normal().2;
        let b = other.unit_normal().2;
        if a.is_constant() || b.is_constant() {
            return Self::one();
        }
        // Fast paths: equal polynomials, and divisibility either way.
        if a == b {
            return a;
        }
        if a.exact_div(&b).is_some() {
            return b;
        }
        if b.exact_div(&a).is_some() {
            return a;
        }
        Self::gcd_inner(&a, &b).unit_normal().2
    }

    fn gcd_inner(a: &Self, b: &Self) -> Self {
        let common: Vec<Sym> = a
            .vars
            .iter()
            .copied()
            .filter(|v| b.vars.contains(v))
            .collect();
        if common.is_empty() {
            return Self::one();
        }
        // Main variable: smallest combined degree keeps the PRS short.
        let main = *common
            .iter()
            .min_by_key(|&&v| {
                let da = a.max_exp(v).unwrap_or(0);
                let db = b.max_exp(v).unwrap_or(0);
                da.min(db)
            })
            .unwrap();
        let (ca, pa) = Self::content_pp(a, main);
        let (cb, pb) = Self::content_pp(b, main);
        let cont = if ca.is_constant() || cb.is_constant() {
            Self::one()
        } else {
            Self::gcd_inner(&ca, &cb).unit_normal().2
        };
        let g = Self::prs_gcd(&pa, &pb, main);
        cont.mul(&g)
    }

    /// Content (gcd of univariate coefficients) and primitive part in `v`.
    fn content_pp(p: &Self, v: Sym) -> (Self, Self) {
        let coeffs = p.collect(v);
        let mut cont = MultiLaurent::zero();
        for (_, c) in &coeffs {
            cont = if cont.is_zero() {
                c.unit_normal().2
            } else if cont.is_one() {
                break;
            } else {
                cont.gcd(c)
            };
        }
        if cont.is_one() {
            return (cont, p.clone());
        }
        let parts: Vec<(i32, MultiLaurent)> = coeffs
            .into_iter()
            .map(|(e, c)| (e, c.exact_div(&cont).expect("content divides")))
            .collect();
        (cont, Self::assemble(v, &parts))
    }

    /// Primitive polynomial remainder sequence in the main variable `v`.
    fn prs_gcd(pa: &Self, pb: &Self, v: Sym) -> Self {
        let mut r0 = pa.clone();
        let mut r1 = pb.clone();
        if r0.max_exp(v) < r1.max_exp(v) {
            std::mem::swap(&mut r0, &mut r1);
        }
        loop {
            if r1.is_zero() {
                return Self::content_pp(&r0, v).1.unit_normal().2;
            }
            let rem = Self::pseudo_rem(&r0, &r1, v);
            r0 = r1;
            r1 = if rem.is_zero() {
                rem
            } else {
                Self::content_pp(&rem, v).1.unit_normal().2
            };
            if r0.max_exp(v).unwrap_or(0) == 0 {
                // Degree-zero remainder: coprime in v.
                return Self::one();
            }
        }
    }

    /// Pseudo-remainder of `a` by `b` in `v` (both with v-degree >= 0).
    fn pseudo_rem(a: &Self, b: &Self, v: Sym) -> Self {
        let db = b.max_exp(v).unwrap();
        let bcol = b.collect(v);
        let lb = bcol
            .iter()
            .find(|(e, _)| *e == db)
            .map(|(_, c)| c.clone())
            .unwrap();
        let mut rem = a.clone();
        loop {
            if rem.is_zero() {
                return rem;
            }
            let dr = rem.max_exp(v).unwrap();
            if dr < db {
                return rem;
            }
            let lr = rem.coefficient_of(v, dr);
            // rem <- lb*rem - lr*v^(dr-db)*b
            let shift = Self::monomial(BigRational::one(), &[(v, dr - db)]);
            rem = rem.mul(&lb).sub(&lr.mul(&shift).mul(b));
        }
    }

    /// Evaluates with each variable bound to a rational number.
    pub fn eval_rational(&self, bind: &dyn Fn(Sym) -> BigRational) -> Option<BigRational> {
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e % 2 != 0 {
                    return None;
                }
                let v = bind(self.vars[i]);
                let k = e / 2;
                if k >= 0 {
                    term *= num::pow::pow(v, k as usize);
                } else {
                    if v.is_zero() {
                        return None;
                    }
                    term *= num::pow::pow(v.recip(), (-k) as usize);
                }
            }
            acc += term;
        }
        Some(acc)
    }

    /// True when every coefficient is a non-negative integer.
    pub fn has_nonneg_integer_coeffs(&self) -> bool {
        self.terms
            .values()
            .all(|c| c.is_integer() && !c.is_negative())
    }

    /// Terms with negative coefficients, for positivity reports.
    pub fn negative_terms(&self) -> Vec<MultiLaurent> {
        self.terms
            .iter()
            .filter(|(_, c)| c.is_negative())
            .map(|(m, c)| {
                let pows: Vec<(Sym, i32)> = self
                    .vars
                    .iter()
                    .zip(m.0.iter())
                    .map(|(&s, &e)| (s, e))
                    .collect();
                MultiLaurent::monomial(c.clone(), &pows)
            })
            .collect()
    }
}

fn fmt_exp(f: &mut fmt::Formatter<'_>, s: Sym, e: i32) -> fmt::Result {
    if e == 2 {
        write!(f, "{s}")
    } else if e % 2 == 0 {
        write!(f, "{s}^{}", e / 2)
    } else {
        write!(f, "{s}^({e}/2)")
    }
}

impl fmt::Display for MultiLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c.clone() } else { c.clone() };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = abs.is_one() && !m.is_zero();
            if !unit_coeff {
                write!(f, "{abs}")?;
            }
            let mut first = unit_coeff;
            for (j, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                fmt_exp(f, self.vars[j], e)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> MultiLaurent {
        MultiLaurent::var(Sym::Q)
    }

    fn t() -> MultiLaurent {
        MultiLaurent::var(Sym::T)
    }

    #[test]
    fn arithmetic_basics() {
        let one = MultiLaurent::one();
        let p = one.sub(&q()); // 1 - q
        let r = one.sub(&t()); // 1 - t
        let prod = p.mul(&r);
        assert_eq!(prod.num_terms(), 4);
        assert_eq!(prod.exact_div(&p), Some(r.clone()));
        assert!(p.add(&p.neg()).is_zero());
    }

    #[test]
    fn exact_div_laurent_shift() {
        // (1 - q^2 t^2) / (1 - q t) = 1 + q t, with a negative-exponent twist
        let qt = q().mul(&t());
        let a = MultiLaurent::one().sub(&qt.pow(2));
        let b = MultiLaurent::one().sub(&qt);
        assert_eq!(a.exact_div(&b), Some(MultiLaurent::one().add(&qt)));
        // q^{-1}(1 - q) divides (1 - q)
        let c = MultiLaurent::monomial(rat(1, 1), &[(Sym::Q, -2)])
            .mul(&MultiLaurent::one().sub(&q()));
        let d = MultiLaurent::one().sub(&q());
        let quo = d.exact_div(&c).unwrap();
        assert_eq!(quo, MultiLaurent::var(Sym::Q));
        assert!(d.exact_div(&MultiLaurent::one().sub(&t())).is_none());
    }

    #[test]
    fn gcd_binomials() {
        let a = MultiLaurent::one().sub(&q()).mul(&MultiLaurent::one().sub(&t()));
        let b = MultiLaurent::one().sub(&q()).mul(&MultiLaurent::one().add(&t()));
        assert_eq!(a.gcd(&b), MultiLaurent::one().sub(&q()).neg().unit_normal().2);
        // gcd normalizes sign: leading coeff positive, so 1-q becomes
        // the canonical -(q-1)... check leading positivity instead.
        let g = a.gcd(&b);
        assert!(g.leading().unwrap().1 > &BigRational::zero());
        assert!(a.exact_div(&g).is_some());
        assert!(b.exact_div(&g).is_some());
    }

    #[test]
    fn gcd_monomial_is_unit() {
        let m = MultiLaurent::monomial(rat(3, 2), &[(Sym::Q, 4)]);
        let p = MultiLaurent::one().add(&q());
        assert_eq!(m.gcd(&p), MultiLaurent::one());
    }

    #[test]
    fn unit_normal_form() {
        let p = MultiLaurent::monomial(rat(-2, 3), &[(Sym::T, -2)])
            .mul(&MultiLaurent::one().sub(&q()));
        let (r, mono, canon) = p.unit_normal();
        let rebuilt = canon
            .scale(&r)
            .mul(&MultiLaurent::monomial(BigRational::one(), &mono));
        assert_eq!(rebuilt, p);
        assert!(canon.leading().unwrap().1 > &BigRational::zero());
    }

    #[test]
    fn display_half_powers() {
        let p = MultiLaurent::monomial(rat(1, 1), &[(Sym::T, 1)])
            .sub(&MultiLaurent::monomial(rat(1, 1), &[(Sym::T, -1)]));
        assert_eq!(p.to_string(), "t^(1/2) - t^(-1/2)");
    }
}
