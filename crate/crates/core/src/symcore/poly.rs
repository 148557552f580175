//! Sparse multivariate polynomials with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::symcore::SymError;

/// Variable kinds. The id packs the kind into the top bits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(pub u16);

const KIND_SHIFT: u16 = 12;
const IDX_MASK: u16 = (1 << KIND_SHIFT) - 1;

impl Var {
    const ALPHA: u16 = 0;
    const BETA: u16 = 1;
    const ELEM: u16 = 2;
    const LAMBDA: u16 = 3;
    const GEN: u16 = 4;

    fn new(kind: u16, i: usize) -> Var {
        assert!(i >= 1 && i <= IDX_MASK as usize, "variable index out of range");
        Var((kind << KIND_SHIFT) | i as u16)
    }
    /// i-th variable of the alphabet A (1-based).
    pub fn a(i: usize) -> Var {
        Var::new(Self::ALPHA, i)
    }
    /// i-th variable of the alphabet B (1-based).
    pub fn b(i: usize) -> Var {
        Var::new(Self::BETA, i)
    }
    /// e_i of the equivariant alphabet S.
    pub fn e(i: usize) -> Var {
        Var::new(Self::ELEM, i)
    }
    /// Deformation parameter lambda_i.
    pub fn lam(i: usize) -> Var {
        Var::new(Self::LAMBDA, i)
    }
    /// Generic variable x_i.
    pub fn x(i: usize) -> Var {
        Var::new(Self::GEN, i)
    }
    pub fn kind(self) -> u16 {
        self.0 >> KIND_SHIFT
    }
    pub fn index(self) -> usize {
        (self.0 & IDX_MASK) as usize
    }

    pub fn parse(s: &str) -> Option<Var> {
        let (head, tail) = if let Some(rest) = s.strip_prefix('λ') {
            ("l", rest)
        } else {
            s.split_at(s.find(|c: char| c.is_ascii_digit())?)
        };
        let i: usize = tail.parse().ok()?;
        if i == 0 || i > IDX_MASK as usize {
            return None;
        }
        Some(match head {
            "A" => Var::a(i),
            "B" => Var::b(i),
            "e" => Var::e(i),
            "l" => Var::lam(i),
            "x" => Var::x(i),
            _ => return None,
        })
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = match self.kind() {
            Self::ALPHA => "A",
            Self::BETA => "B",
            Self::ELEM => "e",
            Self::LAMBDA => "l",
            _ => "x",
        };
        write!(f, "{}{}", p, self.index())
    }
}

/// Monomial: sorted list of (variable, positive exponent).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(pub Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }
    pub fn var(v: Var) -> Self {
        Monomial(vec![(v, 1)])
    }
    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, u32)>) -> Self {
        let mut map: BTreeMap<Var, u32> = BTreeMap::new();
        for (v, e) in pairs {
            *map.entry(v).or_default() += e;
        }
        Monomial(map.into_iter().filter(|&(_, e)| e > 0).collect())
    }
    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }
    pub fn exp(&self, v: Var) -> u32 {
        self.0
            .iter()
            .find(|&&(w, _)| w == v)
            .map(|&(_, e)| e)
            .unwrap_or(0)
    }
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }
    /// self / other if other divides self.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::new();
        let mut j = 0;
        for &(v, e) in &self.0 {
            let mut d = 0;
            if j < other.0.len() && other.0[j].0 == v {
                d = other.0[j].1;
                j += 1;
            } else if j < other.0.len() && other.0[j].0 < v {
                return None;
            }
            if d > e {
                return None;
            }
            if e > d {
                out.push((v, e - d));
            }
        }
        if j < other.0.len() {
            return None;
        }
        Some(Monomial(out))
    }
    /// Graded reverse-free lex key used for leading terms: total degree first.
    fn lead_key(&self) -> (u32, Vec<(std::cmp::Reverse<Var>, u32)>) {
        (
            self.degree(),
            self.0.iter().map(|&(v, e)| (std::cmp::Reverse(v), e)).collect(),
        )
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&(v, e)| if e == 1 { v.to_string() } else { format!("{}^{}", v, e) })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Polynomial with rational coefficients; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, BigRational>,
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }
    pub fn one() -> Self {
        Poly::constant(BigRational::one())
    }
    pub fn int(n: i64) -> Self {
        Poly::constant(rat(n))
    }
    pub fn constant(c: BigRational) -> Self {
        let mut p = Poly::zero();
        p.add_term(Monomial::one(), c);
        p
    }
    pub fn var(v: Var) -> Self {
        Poly::monomial(Monomial::var(v), BigRational::one())
    }
    pub fn monomial(m: Monomial, c: BigRational) -> Self {
        let mut p = Poly::zero();
        p.add_term(m, c);
        p
    }
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }
    /// Constant value if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                if m.0.is_empty() {
                    Some(c.clone())
                } else {
                    None
                }
            }
            _ => None,
        }
    }
    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }
    pub fn scale(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }
    pub fn pow(&self, n: u32) -> Poly {
        let mut out = Poly::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }
    pub fn vars(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self
            .terms
            .keys()
            .flat_map(|m| m.0.iter().map(|&(v, _)| v))
            .collect();
        vs.sort();
        vs.dedup();
        vs
    }

    /// Substitute polynomials for variables; unbound variables are kept.
    pub fn substitute(&self, f: &dyn Fn(Var) -> Option<Poly>) -> Poly {
        let mut cache: BTreeMap<(Var, u32), Poly> = BTreeMap::new();
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut term = Poly::constant(c.clone());
            let mut kept = Vec::new();
            for &(v, e) in &m.0 {
                match f(v) {
                    Some(p) => {
                        let pe = cache.entry((v, e)).or_insert_with(|| p.pow(e)).clone();
                        term = &term * &pe;
                    }
                    None => kept.push((v, e)),
                }
            }
            if !kept.is_empty() {
                term = &term * &Poly::monomial(Monomial(kept), BigRational::one());
            }
            out += &term;
        }
        out
    }

    /// Evaluate with every variable bound.
    pub fn eval(&self, f: &dyn Fn(Var) -> Option<BigRational>) -> Result<BigRational, SymError> {
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for &(v, e) in &m.0 {
                let x = f(v).ok_or(SymError::MissingBinding(v.to_string()))?;
                term *= num_traits::pow(x, e as usize);
            }
            total += term;
        }
        Ok(total)
    }

    fn leading(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().max_by(|a, b| a.0.lead_key().cmp(&b.0.lead_key()))
    }

    /// Exact division; `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        let (dm, dc) = d.leading()?;
        let (dm, dc) = (dm.clone(), dc.clone());
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some((m, c)) = rem.leading() {
            let qm = m.div(&dm)?;
            let qc = c / &dc;
            let t = Poly::monomial(qm, qc);
            rem = &rem - &(&t * d);
            quot += &t;
        }
        Some(quot)
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}
impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}
impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}
impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}
impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}
impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}
impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}
impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

fn fmt_rat(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        // highest degree first for readability
        let mut items: Vec<_> = self.terms.iter().collect();
        items.sort_by(|a, b| b.0.lead_key().cmp(&a.0.lead_key()));
        for (m, c) in items {
            let neg = c.is_negative();
            let a = c.abs();
            let body = if m.0.is_empty() {
                fmt_rat(&a)
            } else if a.is_one() {
                m.to_string()
            } else {
                format!("{}*{}", fmt_rat(&a), m)
            };
            if first {
                write!(f, "{}{}", if neg { "-" } else { "" }, body)?;
            } else {
                write!(f, " {} {}", if neg { "-" } else { "+" }, body)?;
            }
            first = false;
        }
        Ok(())
    }
}

/// Parse a rational literal such as `3`, `-2/5`.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(BigRational::new(n, d))
    } else {
        let n: BigInt = s.parse().ok()?;
        Some(BigRational::from_integer(n))
    }
}

/// Elementary symmetric polynomial e_k in the given variables.
pub fn elementary(k: usize, vars: &[Var]) -> Poly {
    let mut out = Poly::zero();
    if k > vars.len() {
        return out;
    }
    for combo in itertools::Itertools::combinations(vars.iter().copied(), k) {
        out.add_term(
            Monomial::from_pairs(combo.into_iter().map(|v| (v, 1))),
            BigRational::one(),
        );
    }
    out
}

/// Complete homogeneous symmetric polynomial h_k in the given variables.
pub fn complete(k: usize, vars: &[Var]) -> Poly {
    let mut out = Poly::zero();
    if vars.is_empty() {
        return if k == 0 { Poly::one() } else { out };
    }
    for combo in itertools::Itertools::combinations_with_replacement(vars.iter().copied(), k) {
        out.add_term(
            Monomial::from_pairs(combo.into_iter().map(|v| (v, 1))),
            BigRational::one(),
        );
    }
    out
}

/// Determinant by cofactor-free fraction-free elimination (Bareiss).
pub fn det(m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    if n == 0 {
        return Poly::one();
    }
    let mut a: Vec<Vec<Poly>> = m.to_vec();
    let mut sign = 1i64;
    let mut prev = Poly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return Poly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
        }
        prev = a[k][k].clone();
    }
    a[n - 1][n - 1].scale(&rat(sign))
}
