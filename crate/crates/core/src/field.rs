//! Exact arithmetic in F_{p^m} and in univariate polynomial rings over it.
//!
//! Elements of F_q (q = p^m) are stored as integer codes in `[0, q)`: the
//! base-p digits of the code are the coordinates of the element in the
//! power basis of the canonical modulus, least significant digit first.
//! For m = 1 the code is just the canonical representative in `[0, p)`.

use crate::error::{Error, Result};

pub type FqElem = u64;

/// Description of the finite field F_q = F_{p^m} with its canonical modulus.
#[derive(Clone, Debug)]
pub struct Fq {
    p: u64,
    m: usize,
    q: u64,
    /// Monic irreducible over F_p of degree m, ascending coefficients.
    /// `[0, 1]` (the polynomial z) when m = 1, so reduction is a no-op.
    modulus: Vec<u64>,
    mul_t: Vec<u32>,
    inv_t: Vec<u32>,
}

impl PartialEq for Fq {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.modulus == other.modulus
    }
}
impl Eq for Fq {}

const EXT_ORDER_LIMIT: u64 = 1024;

impl Fq {
    pub fn new(p: u64, m: usize) -> Result<Fq> {
        if m == 0 {
            return Err(Error::InvalidInput("extension degree must be >= 1".into()));
        }
        if !is_prime(p) {
            return Err(Error::InvalidInput(format!("{p} is not prime")));
        }
        let q = checked_pow(p, m)
            .ok_or_else(|| Error::InvalidInput(format!("{p}^{m} overflows")))?;
        if m > 1 && q > EXT_ORDER_LIMIT {
            return Err(Error::InvalidInput(format!(
                "extension field order {q} exceeds supported limit {EXT_ORDER_LIMIT}"
            )));
        }
        let modulus = if m == 1 {
            vec![0, 1]
        } else {
            least_irreducible_mod_p(p, m)
        };
        let mut field = Fq { p, m, q, modulus, mul_t: Vec::new(), inv_t: Vec::new() };
        if m > 1 {
            field.build_tables();
        }
        Ok(field)
    }

    /// Construct from the field order, factoring q = p^m.
    pub fn from_order(q: u64) -> Result<Fq> {
        let (p, m) = prime_power(q)
            .ok_or_else(|| Error::InvalidInput(format!("{q} is not a prime power")))?;
        Fq::new(p, m)
    }

    pub fn p(&self) -> u64 {
        self.p
    }
    pub fn m(&self) -> usize {
        self.m
    }
    pub fn q(&self) -> u64 {
        self.q
    }
    /// Canonical modulus over F_p (ascending coefficients); None for m = 1.
    pub fn modulus(&self) -> Option<&[u64]> {
        if self.m == 1 {
            None
        } else {
            Some(&self.modulus)
        }
    }

    fn build_tables(&mut self) {
        let q = self.q as usize;
        let mut mul_t = vec![0u32; q * q];
        for a in 0..self.q {
            for b in a..self.q {
                let v = self.mul_raw(a, b) as u32;
                mul_t[(a * self.q + b) as usize] = v;
                mul_t[(b * self.q + a) as usize] = v;
            }
        }
        let mut inv_t = vec![0u32; q];
        for a in 1..self.q {
            for b in 1..self.q {
                if mul_t[(a * self.q + b) as usize] == 1 {
                    inv_t[a as usize] = b as u32;
                    break;
                }
            }
        }
        self.mul_t = mul_t;
        self.inv_t = inv_t;
    }

    fn digits(&self, a: FqElem) -> Vec<u64> {
        let mut a = a;
        let mut out = Vec::with_capacity(self.m);
        for _ in 0..self.m {
            out.push(a % self.p);
            a /= self.p;
        }
        out
    }

    fn from_digits(&self, d: &[u64]) -> FqElem {
        let mut v = 0;
        for &c in d.iter().rev() {
            v = v * self.p + (c % self.p);
        }
        v
    }

    /// Coefficient vector over F_p of the canonical representative.
    pub fn elem_digits(&self, a: FqElem) -> Vec<u64> {
        self.digits(a)
    }

    pub fn elem_from_digits(&self, d: &[u64]) -> Result<FqElem> {
        if d.len() != self.m || d.iter().any(|&c| c >= self.p) {
            return Err(Error::InvalidInput(format!(
                "expected {} digits below {}",
                self.m, self.p
            )));
        }
        Ok(self.from_digits(d))
    }

    fn mul_raw(&self, a: FqElem, b: FqElem) -> FqElem {
        // schoolbook product of digit vectors, reduced mod the modulus
        let da = self.digits(a);
        let db = self.digits(b);
        let mut prod = vec![0u64; 2 * self.m];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        // reduce by the monic modulus of degree m
        for k in (self.m..2 * self.m).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for (j, &mc) in self.modulus.iter().enumerate().take(self.m) {
                let idx = k - self.m + j;
                prod[idx] = (prod[idx] + c * (self.p - mc % self.p)) % self.p;
            }
        }
        self.from_digits(&prod[..self.m])
    }

    #[inline]
    pub fn zero(&self) -> FqElem {
        0
    }
    #[inline]
    pub fn one(&self) -> FqElem {
        1
    }

    #[inline]
    pub fn add(&self, a: FqElem, b: FqElem) -> FqElem {
        if self.m == 1 {
            (a + b) % self.p
        } else {
            let mut out = 0;
            let mut mult = 1;
            let (mut a, mut b) = (a, b);
            for _ in 0..self.m {
                out += ((a % self.p + b % self.p) % self.p) * mult;
                a /= self.p;
                b /= self.p;
                mult *= self.p;
            }
            out
        }
    }

    #[inline]
    pub fn neg(&self, a: FqElem) -> FqElem {
        if self.m == 1 {
            (self.p - a) % self.p
        } else {
            let mut out = 0;
            let mut mult = 1;
            let mut a = a;
            for _ in 0..self.m {
                out += ((self.p - a % self.p) % self.p) * mult;
                a /= self.p;
                mult *= self.p;
            }
            out
        }
    }

    #[inline]
    pub fn sub(&self, a: FqElem, b: FqElem) -> FqElem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FqElem, b: FqElem) -> FqElem {
        if self.m == 1 {
            (a * b) % self.p
        } else {
            self.mul_t[(a * self.q + b) as usize] as u64
        }
    }

    pub fn inv(&self, a: FqElem) -> Result<FqElem> {
        if a == 0 {
            return Err(Error::NotInvertible);
        }
        if self.m == 1 {
            Ok(mod_inverse(a, self.p))
        } else {
            Ok(self.inv_t[a as usize] as u64)
        }
    }

    pub fn pow(&self, a: FqElem, mut e: u128) -> FqElem {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// The image of the integer k in F_q (via repeated addition of 1, i.e. k mod p).
    pub fn from_int(&self, k: u64) -> FqElem {
        k % self.p
    }

    pub fn elements(&self) -> impl Iterator<Item = FqElem> {
        0..self.q
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn checked_pow(p: u64, m: usize) -> Option<u64> {
    let mut v: u64 = 1;
    for _ in 0..m {
        v = v.checked_mul(p)?;
    }
    Some(v)
}

fn prime_power(q: u64) -> Option<(u64, usize)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            let mut v = q;
            let mut m = 0;
            while v % p == 0 {
                v /= p;
                m += 1;
            }
            return if v == 1 { Some((p, m)) } else { None };
        }
        p += 1;
    }
    Some((q, 1))
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat; p prime and a != 0
    let mut e = p - 2;
    let mut base = a % p;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

/// Lexicographically least (coefficients compared low-to-high) monic
/// irreducible of degree m over F_p.
fn least_irreducible_mod_p(p: u64, m: usize) -> Vec<u64> {
    let total = checked_pow(p, m).expect("checked in Fq::new");
    for code in 0..total {
        // decode so that a_0 is the most significant digit: ascending code
        // order is then ascending lexicographic order on (a_0,...,a_{m-1})
        let mut coeffs = vec![0u64; m + 1];
        coeffs[m] = 1;
        let mut c = code;
        for j in (0..m).rev() {
            coeffs[j] = c % p;
            c /= p;
        }
        if fp_irreducible(p, &coeffs) {
            return coeffs;
        }
    }
    unreachable!("irreducible polynomials of every degree exist over F_p")
}

/// Irreducibility of a monic polynomial over F_p by trial division with
/// every monic polynomial of degree up to deg/2.
fn fp_irreducible(p: u64, f: &[u64]) -> bool {
    let deg = f.len() - 1;
    if deg == 0 {
        return false;
    }
    for d in 1..=deg / 2 {
        let total = checked_pow(p, d).unwrap();
        for code in 0..total {
            let mut g = vec![0u64; d + 1];
            g[d] = 1;
            let mut c = code;
            for item in g.iter_mut().take(d) {
                *item = c % p;
                c /= p;
            }
            let mut rem: Vec<u64> = f.to_vec();
            for k in (d..=deg).rev() {
                let lead = rem[k];
                if lead == 0 {
                    continue;
                }
                for (j, &gc) in g.iter().enumerate().take(d) {
                    rem[k - d + j] = (rem[k - d + j] + lead * (p - gc % p)) % p;
                }
                rem[k] = 0;
            }
            if rem.iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// Univariate polynomial over a contextual `Fq`, ascending coefficients,
/// no trailing zeros (the zero polynomial is the empty sequence).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly {
    coeffs: Vec<FqElem>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly { coeffs: vec![1] }
    }

    pub fn constant(c: FqElem) -> Poly {
        if c == 0 {
            Poly::zero()
        } else {
            Poly { coeffs: vec![c] }
        }
    }

    pub fn x() -> Poly {
        Poly { coeffs: vec![0, 1] }
    }

    /// x^k
    pub fn monomial(k: usize) -> Poly {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = 1;
        Poly { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<FqElem>) -> Poly {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[FqElem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FqElem {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading(&self) -> FqElem {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    /// Human form, e.g. "1+2x+x^3". Extension-field coefficients are
    /// printed as their integer codes.
    pub fn display(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let term = match (i, c) {
                (0, c) => format!("{c}"),
                (i, 1) => mono(i),
                (i, c) => format!("{c}{}", mono(i)),
            };
            parts.push(term);
        }
        parts.join("+")
    }
}

fn mono(i: usize) -> String {
    if i == 1 {
        "x".into()
    } else {
        format!("x^{i}")
    }
}

/// Compare residues as padded coefficient vectors, low coefficient first.
pub fn residue_cmp(a: &Poly, b: &Poly, width: usize) -> std::cmp::Ordering {
    for i in 0..width {
        match a.coeff(i).cmp(&b.coeff(i)) {
            std::cmp::Ordering::Equal => {}
            ord => return ord,
        }
    }
    std::cmp::Ordering::Equal
}

/// All residues of degree < width, in ascending canonical order
/// (lexicographic on coefficients, low coefficient first).
pub fn residues(field: &Fq, width: usize) -> Vec<Poly> {
    let total = checked_pow(field.q(), width).expect("residue space too large");
    let mut out = Vec::with_capacity(total as usize);
    for code in 0..total {
        let mut coeffs = vec![0u64; width];
        let mut c = code;
        for j in (0..width).rev() {
            coeffs[j] = c % field.q();
            c /= field.q();
        }
        out.push(Poly::from_coeffs(coeffs));
    }
    out
}

impl Fq {
    pub fn poly_add(&self, a: &Poly, b: &Poly) -> Poly {
        let n = a.coeffs.len().max(b.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.add(a.coeff(i), b.coeff(i)));
        }
        Poly::from_coeffs(out)
    }

    pub fn poly_neg(&self, a: &Poly) -> Poly {
        Poly::from_coeffs(a.coeffs.iter().map(|&c| self.neg(c)).collect())
    }

    pub fn poly_sub(&self, a: &Poly, b: &Poly) -> Poly {
        self.poly_add(a, &self.poly_neg(b))
    }

    pub fn poly_scale(&self, a: &Poly, c: FqElem) -> Poly {
        Poly::from_coeffs(a.coeffs.iter().map(|&x| self.mul(x, c)).collect())
    }

    pub fn poly_mul(&self, a: &Poly, b: &Poly) -> Poly {
        if a.is_zero() || b.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![0; a.coeffs.len() + b.coeffs.len() - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                out[i + j] = self.add(out[i + j], self.mul(x, y));
            }
        }
        Poly::from_coeffs(out)
    }

    /// Quotient and remainder; `b` must be nonzero.
    pub fn poly_divmod(&self, a: &Poly, b: &Poly) -> Result<(Poly, Poly)> {
        let db = b.degree().ok_or_else(|| Error::InvalidInput("division by zero polynomial".into()))?;
        let lead_inv = self.inv(b.leading())?;
        let mut rem = a.coeffs.clone();
        if rem.len() <= db {
            return Ok((Poly::zero(), a.clone()));
        }
        let mut quot = vec![0; rem.len() - db];
        for k in (db..rem.len()).rev() {
            let c = self.mul(rem[k], lead_inv);
            if c == 0 {
                continue;
            }
            quot[k - db] = c;
            for (j, &bc) in b.coeffs.iter().enumerate() {
                rem[k - db + j] = self.sub(rem[k - db + j], self.mul(c, bc));
            }
        }
        Ok((Poly::from_coeffs(quot), Poly::from_coeffs(rem)))
    }

    pub fn poly_rem(&self, a: &Poly, b: &Poly) -> Result<Poly> {
        Ok(self.poly_divmod(a, b)?.1)
    }

    /// Exact division; errors if the remainder is nonzero.
    pub fn poly_div_exact(&self, a: &Poly, b: &Poly) -> Result<Poly> {
        let (q, r) = self.poly_divmod(a, b)?;
        if !r.is_zero() {
            return Err(Error::InvalidInput("inexact polynomial division".into()));
        }
        Ok(q)
    }

    pub fn poly_monic(&self, a: &Poly) -> Result<Poly> {
        if a.is_zero() {
            return Err(Error::InvalidInput("cannot normalize zero polynomial".into()));
        }
        Ok(self.poly_scale(a, self.inv(a.leading())?))
    }

    /// Extended gcd: returns (g, u, v) with u*a + v*b = g, g monic.
    pub fn poly_ext_gcd(&self, a: &Poly, b: &Poly) -> Result<(Poly, Poly, Poly)> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::InvalidInput("gcd of two zero polynomials".into()));
        }
        let mut r0 = a.clone();
        let mut r1 = b.clone();
        let mut u0 = Poly::one();
        let mut u1 = Poly::zero();
        let mut v0 = Poly::zero();
        let mut v1 = Poly::one();
        while !r1.is_zero() {
            let (q, r) = self.poly_divmod(&r0, &r1)?;
            let u = self.poly_sub(&u0, &self.poly_mul(&q, &u1));
            let v = self.poly_sub(&v0, &self.poly_mul(&q, &v1));
            r0 = r1;
            r1 = r;
            u0 = u1;
            u1 = u;
            v0 = v1;
            v1 = v;
        }
        let lead_inv = self.inv(r0.leading())?;
        Ok((
            self.poly_scale(&r0, lead_inv),
            self.poly_scale(&u0, lead_inv),
            self.poly_scale(&v0, lead_inv),
        ))
    }

    pub fn poly_gcd(&self, a: &Poly, b: &Poly) -> Result<Poly> {
        Ok(self.poly_ext_gcd(a, b)?.0)
    }

    pub fn poly_mul_mod(&self, a: &Poly, b: &Poly, modulus: &Poly) -> Result<Poly> {
        if modulus.degree().map_or(true, |d| d == 0) {
            return Err(Error::InvalidInput("modulus must be nonconstant".into()));
        }
        self.poly_rem(&self.poly_mul(a, b), modulus)
    }

    pub fn poly_pow_mod(&self, a: &Poly, mut e: u128, modulus: &Poly) -> Result<Poly> {
        let mut base = self.poly_rem(a, modulus)?;
        let mut acc = self.poly_rem(&Poly::one(), modulus)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.poly_mul_mod(&acc, &base, modulus)?;
            }
            base = self.poly_mul_mod(&base, &base, modulus)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Exponentiation with the exponent given as big-endian bits.
    pub fn poly_pow_mod_bits(&self, a: &Poly, bits: &[bool], modulus: &Poly) -> Result<Poly> {
        let mut acc = self.poly_rem(&Poly::one(), modulus)?;
        let base = self.poly_rem(a, modulus)?;
        for &bit in bits {
            acc = self.poly_mul_mod(&acc, &acc, modulus)?;
            if bit {
                acc = self.poly_mul_mod(&acc, &base, modulus)?;
            }
        }
        Ok(acc)
    }

    pub fn poly_invert_mod(&self, a: &Poly, modulus: &Poly) -> Result<Poly> {
        if modulus.degree().map_or(true, |d| d == 0) {
            return Err(Error::InvalidInput("modulus must be nonconstant".into()));
        }
        let a = self.poly_rem(a, modulus)?;
        if a.is_zero() {
            return Err(Error::NotInvertible);
        }
        let (g, u, _) = self.poly_ext_gcd(&a, modulus)?;
        if g.degree() != Some(0) {
            return Err(Error::NotInvertible);
        }
        self.poly_rem(&u, modulus)
    }

    /// f*(x) = f(0)^{-1} x^{deg f} f(1/x); requires f(0) != 0.
    pub fn reciprocal(&self, f: &Poly) -> Result<Poly> {
        if f.coeff(0) == 0 {
            return Err(Error::InvalidInput(
                "reciprocal requires nonzero constant term".into(),
            ));
        }
        let c = self.inv(f.coeff(0))?;
        let mut coeffs: Vec<FqElem> = f.coeffs.iter().rev().map(|&x| self.mul(x, c)).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Ok(Poly::from_coeffs(coeffs))
    }

    /// x^k g(1/x) with formal degree k (deg g must be <= k).
    pub fn tilde_formal(&self, g: &Poly, k: usize) -> Poly {
        let mut coeffs = vec![0; k + 1];
        for (i, c) in coeffs.iter_mut().enumerate() {
            *c = g.coeff(k - i);
        }
        Poly::from_coeffs(coeffs)
    }

    pub fn derivative(&self, f: &Poly) -> Poly {
        let mut out = Vec::new();
        for (i, &c) in f.coeffs.iter().enumerate().skip(1) {
            out.push(self.mul(c, self.from_int(i as u64)));
        }
        Poly::from_coeffs(out)
    }

    pub fn poly_eval(&self, f: &Poly, x: FqElem) -> FqElem {
        let mut acc = 0;
        for &c in f.coeffs.iter().rev() {
            acc = self.add(self.mul(acc, x), c);
        }
        acc
    }

    /// Irreducibility of a monic polynomial of degree >= 1 over this field,
    /// by the standard gcd-with-Frobenius-powers test.
    pub fn is_irreducible(&self, f: &Poly) -> Result<bool> {
        let d = f
            .degree()
            .filter(|&d| d >= 1)
            .ok_or_else(|| Error::InvalidInput("irreducibility needs degree >= 1".into()))?;
        if !f.is_monic() {
            return Err(Error::InvalidInput("irreducibility test requires monic input".into()));
        }
        let x = Poly::x();
        let mut h = self.poly_rem(&x, f)?;
        for _ in 1..=d / 2 {
            h = self.poly_pow_mod(&h, self.q() as u128, f)?;
            let g = self.poly_gcd(&self.poly_sub(&h, &x), f)?;
            if g.degree() != Some(0) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// x^n - 1 over this field.
    pub fn x_pow_n_minus_1(&self, n: usize) -> Poly {
        let mut coeffs = vec![0; n + 1];
        coeffs[0] = self.neg(1);
        coeffs[n] = 1;
        Poly::from_coeffs(coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modulus_selection_is_lexicographically_least() {
        assert_eq!(Fq::new(2, 2).unwrap().modulus(), Some(&[1, 1, 1][..]));
        // low-to-high comparison: [1,0,1] < [1,1,0], so x^3+x^2+1 beats x^3+x+1
        assert_eq!(Fq::new(2, 3).unwrap().modulus(), Some(&[1, 0, 1, 1][..]));
        assert_eq!(Fq::new(2, 4).unwrap().modulus(), Some(&[1, 0, 0, 1, 1][..]));
        assert_eq!(Fq::new(3, 2).unwrap().modulus(), Some(&[1, 0, 1][..]));
        assert!(Fq::new(5, 1).unwrap().modulus().is_none());
    }

    #[test]
    fn from_order_factors_prime_powers() {
        let f = Fq::from_order(8).unwrap();
        assert_eq!((f.p(), f.m()), (2, 3));
        let f = Fq::from_order(9).unwrap();
        assert_eq!((f.p(), f.m()), (3, 2));
        assert!(Fq::from_order(6).is_err());
        assert!(Fq::from_order(1).is_err());
    }

    #[test]
    fn field_axioms_exhaustive_small_orders() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 16, 25, 27, 49, 64, 81] {
            let f = Fq::from_order(q).unwrap();
            for a in f.elements() {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
                for b in f.elements() {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in f.elements() {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(
                            f.mul(a, f.add(b, c)),
                            f.add(f.mul(a, b), f.mul(a, c))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn ext_gcd_examples() {
        let f2 = Fq::new(2, 1).unwrap();
        // x^2+x+1 and x+1 over F_2 are coprime
        let a = Poly::from_coeffs(vec![1, 1, 1]);
        let b = Poly::from_coeffs(vec![1, 1]);
        let (g, u, v) = f2.poly_ext_gcd(&a, &b).unwrap();
        assert_eq!(g, Poly::one());
        assert_eq!(f2.poly_add(&f2.poly_mul(&u, &a), &f2.poly_mul(&v, &b)), g);

        // x^4-1 and x^2-1 over F_3: gcd = x^2-1
        let f3 = Fq::new(3, 1).unwrap();
        let a = Poly::from_coeffs(vec![2, 0, 0, 0, 1]);
        let b = Poly::from_coeffs(vec![2, 0, 1]);
        let (g, u, v) = f3.poly_ext_gcd(&a, &b).unwrap();
        assert_eq!(g, b);
        assert_eq!(f3.poly_add(&f3.poly_mul(&u, &a), &f3.poly_mul(&v, &b)), g);

        assert!(f3.poly_ext_gcd(&Poly::zero(), &Poly::zero()).is_err());
    }

    #[test]
    fn reciprocal_examples_and_involution() {
        let f2 = Fq::new(2, 1).unwrap();
        let f = Poly::from_coeffs(vec![1, 1, 0, 1]); // x^3+x+1
        let r = f2.reciprocal(&f).unwrap();
        assert_eq!(r, Poly::from_coeffs(vec![1, 0, 1, 1])); // x^3+x^2+1
        assert_eq!(f2.reciprocal(&r).unwrap(), f);

        let f3 = Fq::new(3, 1).unwrap();
        let f = Poly::from_coeffs(vec![2, 0, 1, 1]); // x^3+x^2+2
        let r = f3.reciprocal(&f).unwrap();
        assert_eq!(r, Poly::from_coeffs(vec![2, 2, 0, 1])); // x^3+2x+2

        // x-1 is self-reciprocal
        let f = Poly::from_coeffs(vec![f3.neg(1), 1]);
        assert_eq!(f3.reciprocal(&f).unwrap(), f);

        // f(0) = 0 is rejected
        assert!(f2.reciprocal(&Poly::x()).is_err());
    }

    #[test]
    fn invert_mod_examples() {
        let f2 = Fq::new(2, 1).unwrap();
        let modulus = Poly::from_coeffs(vec![1, 1, 1]);
        let inv = f2.poly_invert_mod(&Poly::x(), &modulus).unwrap();
        assert_eq!(inv, Poly::from_coeffs(vec![1, 1])); // x*(x+1) = 1 mod x^2+x+1
        assert_eq!(
            f2.poly_invert_mod(&Poly::one(), &modulus).unwrap(),
            Poly::one()
        );
        // x^21 mod x^21-1 = 1
        let a = Poly::monomial(21);
        let m = f2.x_pow_n_minus_1(21);
        assert_eq!(f2.poly_rem(&a, &m).unwrap(), Poly::one());
        // non-invertible residue
        let f3 = Fq::new(3, 1).unwrap();
        let m = Poly::from_coeffs(vec![2, 0, 1]); // x^2-1
        assert!(matches!(
            f3.poly_invert_mod(&Poly::from_coeffs(vec![2, 1]), &m),
            Err(Error::NotInvertible)
        ));
    }

    #[test]
    fn irreducibility_examples() {
        let f2 = Fq::new(2, 1).unwrap();
        assert!(f2.is_irreducible(&Poly::from_coeffs(vec![1, 1, 1])).unwrap());
        assert!(!f2.is_irreducible(&Poly::from_coeffs(vec![1, 0, 1])).unwrap()); // (x+1)^2
        let f3 = Fq::new(3, 1).unwrap();
        assert!(f3
            .is_irreducible(&Poly::from_coeffs(vec![1, 1, 1, 1, 1]))
            .unwrap());
    }

    #[test]
    fn residue_order_is_low_coefficient_first() {
        let f2 = Fq::new(2, 1).unwrap();
        let rs = residues(&f2, 2);
        assert_eq!(
            rs,
            vec![
                Poly::zero(),
                Poly::x(),
                Poly::one(),
                Poly::from_coeffs(vec![1, 1]),
            ]
        );
    }
}
