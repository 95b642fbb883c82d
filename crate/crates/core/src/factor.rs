//! Factorization of x^n - 1 over F_q into monic irreducibles, arranged in
//! the canonical order with reciprocal pairing.
//!
//! The factorization is deterministic: exponents 0..n are partitioned into
//! q-cyclotomic cosets, the minimal polynomial of each coset is built as a
//! product of linear factors over the splitting field F_{q^s} (s = ord_n(q))
//! and its coefficients are mapped back down to F_q.

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::field::{residue_cmp, Fq, Poly};

/// The ordered factorization of x^n - 1 with reciprocal pairing.
///
/// Factors are indexed 0..=r+2t: f_0 = x-1 (and f_1 = x+1 when n is even),
/// indices up to r are self-reciprocal, and indices (r+j, r+j+t) for
/// 1 <= j <= t hold the reciprocal pairs.
#[derive(Clone, Debug)]
pub struct FactorProfile {
    pub field: Fq,
    pub n: usize,
    pub factors: Vec<Poly>,
    pub degrees: Vec<usize>,
    pub r: usize,
    pub t: usize,
}

impl FactorProfile {
    pub fn new(field: Fq, n: usize) -> Result<FactorProfile> {
        let factors = factor_cyclotomic(&field, n)?;
        build_profile(field, n, factors)
    }

    pub fn num_factors(&self) -> usize {
        self.r + 2 * self.t + 1
    }

    /// {0} for n odd, {0, 1} for n even.
    pub fn i0(&self) -> Vec<usize> {
        if self.n % 2 == 0 {
            vec![0, 1]
        } else {
            vec![0]
        }
    }

    pub fn in_i0(&self, i: usize) -> bool {
        i == 0 || (self.n % 2 == 0 && i == 1)
    }

    /// Self-reciprocal indices outside I_0.
    pub fn mid_indices(&self) -> Vec<usize> {
        let start = if self.n % 2 == 0 { 2 } else { 1 };
        (start..=self.r).collect()
    }

    /// The two indices of reciprocal pair j, 1 <= j <= t.
    pub fn pair_indices(&self, j: usize) -> (usize, usize) {
        (self.r + j, self.r + j + self.t)
    }

    /// Pair partner of index i, for indices above r.
    pub fn partner(&self, i: usize) -> Option<usize> {
        if i <= self.r || i >= self.num_factors() {
            None
        } else if i <= self.r + self.t {
            Some(i + self.t)
        } else {
            Some(i - self.t)
        }
    }
}

/// q-cyclotomic cosets of Z_n, each sorted, ordered by least element.
pub fn cyclotomic_cosets(n: usize, q: u64) -> Vec<Vec<usize>> {
    let mut seen = vec![false; n];
    let mut cosets = Vec::new();
    for a in 0..n {
        if seen[a] {
            continue;
        }
        let mut coset = Vec::new();
        let mut b = a;
        loop {
            seen[b] = true;
            coset.push(b);
            b = (b * (q as usize % n)) % n;
            if b == a {
                break;
            }
        }
        coset.sort_unstable();
        cosets.push(coset);
    }
    cosets
}

fn ord_mod(n: usize, q: u64) -> usize {
    let qn = (q % n as u64) as usize;
    let mut acc = qn % n;
    let mut s = 1;
    while acc != 1 % n {
        acc = acc * qn % n;
        s += 1;
    }
    s
}

pub(crate) fn prime_factors_u128(mut v: u128) -> Vec<u128> {
    let mut out = Vec::new();
    let mut d: u128 = 2;
    while d * d <= v {
        if v % d == 0 {
            out.push(d);
            while v % d == 0 {
                v /= d;
            }
        }
        d += 1;
    }
    if v > 1 {
        out.push(v);
    }
    out
}

/// Splitting field F_{q^s} as F_q[z]/(modulus), elements stored as reduced
/// polynomials over F_q.
struct SplitField<'a> {
    field: &'a Fq,
    s: usize,
    modulus: Poly,
}

impl<'a> SplitField<'a> {
    fn new(field: &'a Fq, s: usize) -> SplitField<'a> {
        let modulus = least_irreducible_over(field, s);
        SplitField { field, s, modulus }
    }

    fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        self.field
            .poly_rem(&self.field.poly_mul(a, b), &self.modulus)
            .expect("modulus nonzero")
    }

    fn pow_big(&self, a: &Poly, e: &BigUint) -> Poly {
        let nbits = e.bits();
        let mut acc = self
            .field
            .poly_rem(&Poly::one(), &self.modulus)
            .expect("modulus nonzero");
        for i in (0..nbits).rev() {
            acc = self.mul(&acc, &acc);
            if e.bit(i) {
                acc = self.mul(&acc, a);
            }
        }
        acc
    }

    fn pow(&self, a: &Poly, e: u128) -> Poly {
        self.pow_big(a, &BigUint::from(e))
    }

    fn element_from_code(&self, mut code: u64) -> Poly {
        let mut coeffs = Vec::with_capacity(self.s);
        for _ in 0..self.s {
            coeffs.push(code % self.field.q());
            code /= self.field.q();
        }
        Poly::from_coeffs(coeffs)
    }
}

/// Least monic irreducible of degree s over F_q, candidates compared by
/// ascending coefficients, low coefficient first.
fn least_irreducible_over(field: &Fq, s: usize) -> Poly {
    let q = field.q();
    if s == 1 {
        return Poly::x();
    }
    // a_0 = 0 would make the candidate divisible by x, so skip that block
    let mut block = vec![0u64; s]; // digits (a_0, ..., a_{s-1}), a_0 most significant
    block[0] = 1;
    let mut digits = block;
    loop {
        let mut coeffs = vec![0u64; s + 1];
        coeffs[s] = 1;
        coeffs[..s].copy_from_slice(&digits);
        let cand = Poly::from_coeffs(coeffs);
        if field.is_irreducible(&cand).expect("monic nonconstant") {
            return cand;
        }
        // increment, least significant digit last
        let mut k = s;
        loop {
            k -= 1;
            digits[k] += 1;
            if digits[k] < q {
                break;
            }
            digits[k] = 0;
            assert!(k > 0, "ran out of degree-{s} candidates over F_{q}");
        }
    }
}

/// All monic irreducible factors of x^n - 1 over F_q, ordered by the least
/// exponent of their cyclotomic coset.
pub fn factor_cyclotomic(field: &Fq, n: usize) -> Result<Vec<Poly>> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be positive".into()));
    }
    if n as u64 % field.p() == 0 {
        return Err(Error::NotCoprime { n: n as u64, q: field.q() });
    }
    let cosets = cyclotomic_cosets(n, field.q());
    let s = ord_mod(n, field.q());
    let split = SplitField::new(field, s);

    // primitive n-th root of unity in F_{q^s}
    let q_s = BigUint::from(field.q()).pow(s as u32);
    let exp = (&q_s - BigUint::one()) / BigUint::from(n as u64);
    let n_primes = prime_factors_u128(n as u128);
    let mut zeta = Poly::one();
    'search: for code in 1..u64::MAX {
        let xi = split.element_from_code(code);
        if xi.is_zero() {
            continue;
        }
        let cand = split.pow_big(&xi, &exp);
        for &l in &n_primes {
            if split.pow(&cand, (n as u128) / l) == Poly::one() {
                continue 'search;
            }
        }
        zeta = cand;
        break;
    }

    let mut factors = Vec::with_capacity(cosets.len());
    for coset in &cosets {
        // product of (X - zeta^j) over the coset, coefficients in F_{q^s}
        let mut coeffs: Vec<Poly> = vec![Poly::one()];
        for &j in coset {
            let root = split.pow(&zeta, j as u128);
            let neg_root = field.poly_neg(&root);
            let mut next = vec![Poly::zero(); coeffs.len() + 1];
            for (k, c) in coeffs.iter().enumerate() {
                next[k + 1] = field.poly_add(&next[k + 1], c);
                next[k] = field.poly_add(&next[k], &split.mul(c, &neg_root));
            }
            coeffs = next;
        }
        // coefficients must lie in the base field
        let mut down = Vec::with_capacity(coeffs.len());
        for c in &coeffs {
            if c.degree().map_or(false, |d| d > 0) {
                return Err(Error::Inconsistent(
                    "minimal polynomial coefficient escaped the base field".into(),
                ));
            }
            down.push(c.coeff(0));
        }
        factors.push(Poly::from_coeffs(down));
    }
    Ok(factors)
}

/// Arrange factors into the canonical profile and establish all invariants.
pub fn build_profile(field: Fq, n: usize, factors: Vec<Poly>) -> Result<FactorProfile> {
    if n as u64 % field.p() == 0 {
        return Err(Error::NotCoprime { n: n as u64, q: field.q() });
    }
    // validation: monic irreducible, pairwise distinct, product = x^n - 1
    let mut product = Poly::one();
    for f in &factors {
        if !f.is_monic() || !field.is_irreducible(f)? {
            return Err(Error::Inconsistent(format!(
                "factor {} is not monic irreducible",
                f.display()
            )));
        }
        product = field.poly_mul(&product, f);
    }
    if product != field.x_pow_n_minus_1(n) {
        return Err(Error::Inconsistent(
            "factor product does not equal x^n - 1".into(),
        ));
    }
    let mut sorted_check: Vec<&Poly> = factors.iter().collect();
    sorted_check.sort_by(|a, b| a.coeffs().cmp(b.coeffs()));
    sorted_check.dedup();
    if sorted_check.len() != factors.len() {
        return Err(Error::Inconsistent("repeated factor".into()));
    }

    let x_minus_1 = Poly::from_coeffs(vec![field.neg(1), 1]);
    let x_plus_1 = Poly::from_coeffs(vec![1, 1]);

    let mut self_rec = Vec::new();
    let mut pair_pool: Vec<Poly> = Vec::new();
    for f in &factors {
        if field.reciprocal(f)? == *f {
            self_rec.push(f.clone());
        } else {
            pair_pool.push(f.clone());
        }
    }

    let lex = |a: &Poly, b: &Poly| {
        let w = a.coeffs().len().max(b.coeffs().len());
        residue_cmp(a, b, w)
    };

    // head of the self-reciprocal block: x-1, then x+1 when n is even
    let mut head = Vec::new();
    let pos = self_rec
        .iter()
        .position(|f| *f == x_minus_1)
        .ok_or_else(|| Error::Inconsistent("x - 1 is not among the factors".into()))?;
    head.push(self_rec.remove(pos));
    if n % 2 == 0 {
        let pos = self_rec
            .iter()
            .position(|f| *f == x_plus_1)
            .ok_or_else(|| Error::Inconsistent("x + 1 missing for even n".into()))?;
        head.push(self_rec.remove(pos));
    }
    self_rec.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| lex(a, b))
    });
    // Lemma 2.1(ii): self-reciprocal factors outside I_0 have even degree
    for f in &self_rec {
        if f.degree().unwrap_or(0) % 2 != 0 {
            return Err(Error::Inconsistent(
                "self-reciprocal factor of odd degree outside I_0".into(),
            ));
        }
    }
    let mut ordered = head;
    ordered.extend(self_rec);
    let r = ordered.len() - 1;

    // orient each reciprocal pair with the smaller member first, then sort
    // the pairs by their smaller member
    let mut pairs: Vec<(Poly, Poly)> = Vec::new();
    let mut pool = pair_pool;
    while let Some(f) = pool.pop() {
        let fstar = field.reciprocal(&f)?;
        let pos = pool
            .iter()
            .position(|g| *g == fstar)
            .ok_or_else(|| Error::Inconsistent("unpaired non-self-reciprocal factor".into()))?;
        let g = pool.remove(pos);
        if lex(&f, &g) == std::cmp::Ordering::Less {
            pairs.push((f, g));
        } else {
            pairs.push((g, f));
        }
    }
    pairs.sort_by(|a, b| {
        a.0.degree()
            .cmp(&b.0.degree())
            .then_with(|| lex(&a.0, &b.0))
    });
    let t = pairs.len();
    for (f, _) in &pairs {
        ordered.push(f.clone());
    }
    for (_, g) in &pairs {
        ordered.push(g.clone());
    }

    let degrees: Vec<usize> = ordered.iter().map(|f| f.degree().unwrap()).collect();
    if degrees.iter().sum::<usize>() != n {
        return Err(Error::Inconsistent("factor degrees do not sum to n".into()));
    }
    Ok(FactorProfile { field, n, factors: ordered, degrees, r, t })
}
