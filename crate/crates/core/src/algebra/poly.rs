use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{format_scalar, int, parse_scalar, Ring, Scalar};
use crate::error::{Error, Result};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Exponent vectors are stored with trailing zeros trimmed so that constants
/// and polynomials built over different variable counts compare equal when
/// they denote the same function. No zero coefficient is ever stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Scalar>,
}

fn trim(mut exps: Vec<u32>) -> Vec<u32> {
    while exps.last() == Some(&0) {
        exps.pop();
    }
    exps
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Vec::new(), c);
        p
    }

    /// The coordinate function `x_index`.
    pub fn var(index: usize, nvars: usize) -> Self {
        assert!(index < nvars, "variable index {index} out of range");
        let mut exps = vec![0; index + 1];
        exps[index] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(exps, int(1));
        p
    }

    pub fn monomial(exps: &[u32], coeff: Scalar) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(exps.to_vec(), coeff);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn with_nvars(mut self, nvars: usize) -> Self {
        debug_assert!(self.terms.keys().all(|e| e.len() <= nvars));
        self.nvars = nvars;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Iterates `(exponents, coefficient)`; exponent vectors are padded to `nvars`.
    pub fn terms(&self) -> impl Iterator<Item = (Vec<u32>, &Scalar)> + '_ {
        self.terms.iter().map(move |(e, c)| {
            let mut full = e.clone();
            full.resize(self.nvars.max(e.len()), 0);
            (full, c)
        })
    }

    pub fn coefficient(&self, exps: &[u32]) -> Scalar {
        self.terms
            .get(&trim(exps.to_vec()))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    /// Returns the constant value if the polynomial has degree zero.
    pub fn as_constant(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&Vec::new()).cloned(),
            _ => None,
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    fn add_term(&mut self, exps: Vec<u32>, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        let exps = trim(exps);
        self.nvars = self.nvars.max(exps.len());
        let entry = self.terms.entry(exps);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale_by(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, k)| (e.clone(), k * c))
                .collect(),
        }
    }

    pub fn derivative(&self, index: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let Some(&k) = e.get(index) else { continue };
            if k == 0 {
                continue;
            }
            let mut de = e.clone();
            de[index] -= 1;
            out.add_term(de, c * int(i64::from(k)));
        }
        out
    }

    /// Evaluates at a point of any ring; used with scalars, jets and
    /// polynomials (the latter gives substitution).
    pub fn eval<R: Ring>(&self, point: &[R]) -> R {
        let mut acc = R::zero();
        for (e, c) in &self.terms {
            assert!(
                e.len() <= point.len(),
                "polynomial uses {} variables, point has {}",
                e.len(),
                point.len()
            );
            let mut term = R::from_scalar(c);
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    term = term * x.clone();
                }
            }
            acc = acc + term;
        }
        acc
    }

    pub fn compose(&self, substitution: &[MultiPoly]) -> MultiPoly {
        let nvars = substitution.iter().map(|p| p.nvars).max().unwrap_or(0);
        self.eval(substitution).with_nvars(nvars)
    }

    /// Parses `text` over the named variables. Grammar: sums and differences
    /// of products of factors; a factor is an integer, a rational literal
    /// `a/b`, a variable, or a parenthesised expression, optionally raised to
    /// a non-negative integer power with `^`.
    pub fn parse(text: &str, variables: &[String]) -> Result<MultiPoly> {
        let mut parser = Parser {
            src: text.as_bytes(),
            pos: 0,
            variables,
        };
        let p = parser.expr()?;
        parser.skip_ws();
        if parser.pos != parser.src.len() {
            return Err(parser.error("unexpected trailing input"));
        }
        Ok(p.with_nvars(variables.len()))
    }

    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        PolyDisplay { poly: self, names }
    }
}

struct PolyDisplay<'a> {
    poly: &'a MultiPoly,
    names: &'a [String],
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.poly.terms.iter().enumerate() {
            let negative = *c < Scalar::zero();
            let mag = if negative { -c.clone() } else { c.clone() };
            if idx == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    let name = self
                        .names
                        .get(i)
                        .cloned()
                        .unwrap_or_else(|| format!("x{i}"));
                    if k == 1 {
                        name
                    } else {
                        format!("{name}^{k}")
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{}", format_scalar(&mag))?;
            } else if mag.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{}*{}", format_scalar(&mag), vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&[]))
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    variables: &'a [String],
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Parse(format!(
            "{msg} at offset {} in `{}`",
            self.pos,
            String::from_utf8_lossy(self.src)
        ))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn nvars(&self) -> usize {
        self.variables.len()
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -self.term()?
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc + self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.power()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = acc * self.power()?;
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<MultiPoly> {
        let base = self.factor()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        self.skip_ws();
        let digits = self.digits();
        if digits.is_empty() {
            return Err(self.error("expected exponent"));
        }
        let k: u32 = digits
            .parse()
            .map_err(|_| self.error("exponent out of range"))?;
        let mut out = MultiPoly::constant(self.nvars(), int(1));
        for _ in 0..k {
            out = out * base.clone();
        }
        Ok(out)
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn factor(&mut self) -> Result<MultiPoly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let mut literal = self.digits();
                // `a/b` is a rational literal only between two integers.
                let save = self.pos;
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    let denom = self.digits();
                    if denom.is_empty() {
                        self.pos = save;
                        return Err(self.error("expected integer denominator"));
                    }
                    literal = format!("{literal}/{denom}");
                }
                let value = parse_scalar(&literal)?;
                Ok(MultiPoly::constant(self.nvars(), value))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = String::from_utf8_lossy(&self.src[start..self.pos]);
                match self.variables.iter().position(|v| v == name.as_ref()) {
                    Some(i) => Ok(MultiPoly::var(i, self.nvars())),
                    None => {
                        self.pos = start;
                        Err(self.error(&format!("unknown variable `{name}`")))
                    }
                }
            }
            _ => Err(self.error("expected a number, variable or `(`")),
        }
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;

    fn add(mut self, rhs: MultiPoly) -> MultiPoly {
        self.nvars = self.nvars.max(rhs.nvars);
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;

    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        self + (-rhs)
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Mul for MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars.max(rhs.nvars));
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let len = ea.len().max(eb.len());
                let exps: Vec<u32> = (0..len)
                    .map(|i| ea.get(i).copied().unwrap_or(0) + eb.get(i).copied().unwrap_or(0))
                    .collect();
                out.add_term(exps, ca * cb);
            }
        }
        out
    }
}

impl Zero for MultiPoly {
    fn zero() -> Self {
        MultiPoly::zero(0)
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for MultiPoly {
    fn one() -> Self {
        MultiPoly::constant(0, int(1))
    }
}

impl Ring for MultiPoly {
    fn from_scalar(c: &Scalar) -> Self {
        MultiPoly::constant(0, c.clone())
    }

    fn scale(&self, c: &Scalar) -> Self {
        self.scale_by(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::q;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn parse_and_evaluate() {
        let vars = names(&["s", "t"]);
        let p = MultiPoly::parse("3/2*s^2*t - (t - 1)^2 + 4", &vars).unwrap();
        // at s = 2, t = 3: 3/2*4*3 - 4 + 4 = 18
        assert_eq!(p.eval(&[int(2), int(3)]), int(18));
        assert_eq!(p.nvars(), 2);
        assert_eq!(p.total_degree(), Some(3));
    }

    #[test]
    fn parse_errors() {
        let vars = names(&["t"]);
        assert!(MultiPoly::parse("t +", &vars).is_err());
        assert!(MultiPoly::parse("u", &vars).is_err());
        assert!(MultiPoly::parse("(t", &vars).is_err());
        assert!(MultiPoly::parse("t^", &vars).is_err());
        assert!(MultiPoly::parse("1/0", &vars).is_err());
    }

    #[test]
    fn no_zero_coefficients_stored() {
        let t = MultiPoly::var(0, 1);
        let p = t.clone() * t.clone() - t.clone() * t;
        assert!(p.is_zero());
        assert_eq!(p.num_terms(), 0);
    }

    #[test]
    fn derivative_of_product() {
        let vars = names(&["x", "y"]);
        let p = MultiPoly::parse("x^3*y + 2*x*y^2", &vars).unwrap();
        let dx = MultiPoly::parse("3*x^2*y + 2*y^2", &vars).unwrap();
        let dy = MultiPoly::parse("x^3 + 4*x*y", &vars).unwrap();
        assert_eq!(p.derivative(0), dx);
        assert_eq!(p.derivative(1), dy);
    }

    #[test]
    fn compose_substitutes() {
        let vars = names(&["a", "b"]);
        let p = MultiPoly::parse("a*b", &vars).unwrap();
        let sub = vec![
            MultiPoly::parse("a + b", &vars).unwrap(),
            MultiPoly::parse("a - b", &vars).unwrap(),
        ];
        assert_eq!(
            p.compose(&sub),
            MultiPoly::parse("a^2 - b^2", &vars).unwrap()
        );
    }

    #[test]
    fn display_is_readable() {
        let vars = names(&["s", "t"]);
        let p = MultiPoly::parse("1 - s + 1/2*s*t^2", &vars).unwrap();
        let shown = p.display_with(&vars).to_string();
        let back = MultiPoly::parse(&shown, &vars).unwrap();
        assert_eq!(back, p);
        assert_eq!(p.coefficient(&[1, 2]), q(1, 2));
    }
}
