//! Primitive idempotents of A = F_q[x]/(x^n - 1), the residue fields
//! K_i = F_q[x]/(f_i), the embeddings into A, the x -> x^{-1} action and
//! norm-one subgroups.

use crate::error::{Error, Result};
use crate::factor::{prime_factors_u128, FactorProfile};
use crate::field::{residue_cmp, residues, Fq, Poly};

/// The primitive idempotent eps_i with eps_i = 1 (mod f_i) and
/// eps_i = 0 (mod f_j) for j != i, as a representative of degree < n.
pub fn primitive_idempotent(profile: &FactorProfile, i: usize) -> Result<Poly> {
    let field = &profile.field;
    check_index(profile, i)?;
    let xn1 = field.x_pow_n_minus_1(profile.n);
    let big_f = field.poly_div_exact(&xn1, &profile.factors[i])?;
    // u*F_i + v*f_i = 1, so eps_i = u*F_i (mod x^n - 1)
    let (g, u, _) = field.poly_ext_gcd(&big_f, &profile.factors[i])?;
    debug_assert_eq!(g, Poly::one());
    field.poly_rem(&field.poly_mul(&u, &big_f), &xn1)
}

/// All idempotents of a profile, indexed like its factors.
pub fn idempotent_table(profile: &FactorProfile) -> Result<Vec<Poly>> {
    (0..profile.num_factors())
        .map(|i| primitive_idempotent(profile, i))
        .collect()
}

/// Independent closed-form evaluation of eps_i:
/// eps_i = -(1/n) * tilde((tilde(f_i))') * (x^n - 1)/f_i,
/// where the outer tilde is taken at formal degree deg(f_i) - 1.
pub fn crosscheck_idempotent(profile: &FactorProfile, i: usize) -> Result<bool> {
    let field = &profile.field;
    check_index(profile, i)?;
    let f = &profile.factors[i];
    let d = f.degree().unwrap();
    let xn1 = field.x_pow_n_minus_1(profile.n);
    let big_f = field.poly_div_exact(&xn1, f)?;
    let tf = field.tilde_formal(f, d);
    let dtf = field.derivative(&tf);
    let outer = field.tilde_formal(&dtf, d.saturating_sub(1));
    let scale = field.neg(field.inv(field.from_int(profile.n as u64))?);
    let closed = field.poly_rem(&field.poly_scale(&field.poly_mul(&outer, &big_f), scale), &xn1)?;
    Ok(closed == primitive_idempotent(profile, i)?)
}

/// The field embedding phi_i: K_i -> A_i, a |-> eps_i * a (mod x^n - 1).
pub fn embed(profile: &FactorProfile, i: usize, a: &Poly) -> Result<Poly> {
    let eps = primitive_idempotent(profile, i)?;
    embed_with(profile, &eps, a)
}

/// Same as [`embed`], reusing a precomputed idempotent.
pub fn embed_with(profile: &FactorProfile, eps_i: &Poly, a: &Poly) -> Result<Poly> {
    let field = &profile.field;
    field.poly_rem(&field.poly_mul(eps_i, a), &field.x_pow_n_minus_1(profile.n))
}

/// a(x^{-1}) = a_0 + sum_{l>=1} a_l x^{n-l}, reduced modulo `modulus`.
pub fn inv_substitute(field: &Fq, a: &Poly, modulus: &Poly, n: usize) -> Result<Poly> {
    let mut coeffs = vec![0; n.max(1)];
    coeffs[0] = a.coeff(0);
    for l in 1..=a.degree().unwrap_or(0) {
        if l >= n {
            return Err(Error::InvalidInput("representative degree exceeds n".into()));
        }
        coeffs[n - l] = field.add(coeffs[n - l], a.coeff(l));
    }
    field.poly_rem(&Poly::from_coeffs(coeffs), modulus)
}

/// Multiplicative order of a nonzero residue in K = F_q[x]/(f).
pub fn multiplicative_order(field: &Fq, g: &Poly, f: &Poly) -> Result<u128> {
    let d = f.degree().unwrap_or(0);
    let group = (field.q() as u128).pow(d as u32) - 1;
    let mut ord = group;
    for l in prime_factors_u128(group) {
        while ord % l == 0 {
            let probe = field.poly_pow_mod(g, ord / l, f)?;
            if probe == Poly::one() {
                ord /= l;
            } else {
                break;
            }
        }
    }
    Ok(ord)
}

/// The least residue (ascending coefficient order) of multiplicative
/// order q^d - 1 in K = F_q[x]/(f).
pub fn primitive_element(field: &Fq, f: &Poly) -> Result<Poly> {
    let d = f
        .degree()
        .filter(|&d| d >= 1)
        .ok_or_else(|| Error::InvalidIndex("residue field needs degree >= 1".into()))?;
    let group = (field.q() as u128).pow(d as u32) - 1;
    for g in residues(field, d) {
        if g.is_zero() {
            continue;
        }
        if multiplicative_order(field, &g, f)? == group {
            return Ok(g);
        }
    }
    Err(Error::Inconsistent("no primitive element found".into()))
}

/// The norm-one subgroup {g in K_i : g * g(x^{-1}) = 1} of a residue field
/// with self-reciprocal modulus of even degree d, as the cyclic group
/// generated by rho^(q^{d/2} - 1); size q^{d/2} + 1. Sorted canonically.
pub fn norm_one_subgroup(field: &Fq, f: &Poly) -> Result<Vec<Poly>> {
    let d = f
        .degree()
        .filter(|&d| d >= 1)
        .ok_or_else(|| Error::InvalidIndex("residue field needs degree >= 1".into()))?;
    if d % 2 != 0 {
        return Err(Error::InvalidIndex(format!(
            "norm-one subgroup needs even degree, got {d}"
        )));
    }
    let rho = primitive_element(field, f)?;
    let step = (field.q() as u128).pow((d / 2) as u32) - 1;
    let gen = field.poly_pow_mod(&rho, step, f)?;
    let mut elements = vec![Poly::one()];
    let mut cur = gen.clone();
    while cur != Poly::one() {
        elements.push(cur.clone());
        cur = field.poly_mul_mod(&cur, &gen, f)?;
    }
    elements.sort_by(|a, b| residue_cmp(a, b, d));
    Ok(elements)
}

fn check_index(profile: &FactorProfile, i: usize) -> Result<()> {
    if i >= profile.num_factors() {
        return Err(Error::InvalidIndex(format!(
            "index {i} out of range 0..{}",
            profile.num_factors()
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(coeffs: &[u64]) -> Poly {
        Poly::from_coeffs(coeffs.to_vec())
    }

    fn profile(q: u64, n: usize) -> FactorProfile {
        FactorProfile::new(Fq::from_order(q).unwrap(), n).unwrap()
    }

    #[test]
    fn eps0_is_all_ones_f2_n21() {
        let pr = profile(2, 21);
        let eps0 = primitive_idempotent(&pr, 0).unwrap();
        assert_eq!(eps0, Poly::from_coeffs(vec![1; 21]));
    }

    #[test]
    fn eps_listing_f3_n10() {
        let pr = profile(3, 10);
        assert_eq!(
            primitive_idempotent(&pr, 0).unwrap(),
            Poly::from_coeffs(vec![1; 10])
        );
        // the factor x^4+x^3+x^2+x+1 sits at some self-reciprocal index;
        // its idempotent from the worked listing:
        let f = poly(&[1, 1, 1, 1, 1]);
        let i = pr.factors.iter().position(|g| *g == f).unwrap();
        assert_eq!(
            primitive_idempotent(&pr, i).unwrap(),
            poly(&[1, 2, 2, 2, 2, 1, 2, 2, 2, 2])
        );
    }

    #[test]
    fn idempotent_on_trivial_ring() {
        let pr = profile(7, 1);
        assert_eq!(primitive_idempotent(&pr, 0).unwrap(), Poly::one());
        assert!(crosscheck_idempotent(&pr, 0).unwrap());
    }

    #[test]
    fn idempotent_system_relations() {
        for (q, n) in [(2u64, 21usize), (3, 10), (3, 13), (4, 5), (9, 4)] {
            let pr = profile(q, n);
            let field = &pr.field;
            let xn1 = field.x_pow_n_minus_1(n);
            let eps = idempotent_table(&pr).unwrap();
            let mut sum = Poly::zero();
            for (i, e) in eps.iter().enumerate() {
                sum = field.poly_add(&sum, e);
                assert_eq!(field.poly_mul_mod(e, e, &xn1).unwrap(), *e, "q={q} n={n} i={i}");
                for (j, e2) in eps.iter().enumerate() {
                    if i != j {
                        assert!(field.poly_mul_mod(e, e2, &xn1).unwrap().is_zero());
                    }
                }
                assert!(crosscheck_idempotent(&pr, i).unwrap(), "q={q} n={n} i={i}");
            }
            assert_eq!(sum, Poly::one());
            // x^{-1} action permutes idempotents by the reciprocal pairing
            for i in 0..pr.num_factors() {
                let img = inv_substitute(field, &eps[i], &xn1, n).unwrap();
                let expect = match pr.partner(i) {
                    None => i,
                    Some(k) => k,
                };
                assert_eq!(img, eps[expect], "q={q} n={n} i={i}");
            }
        }
    }

    #[test]
    fn inv_substitute_worked_formulas() {
        // g(x) = a0 + a1 x + a2 x^2 mod f_4 = x^3+x^2+1 at (F_2, n=21):
        // g(x^{-1}) = a0+a2 + (a1+a2) x + a1 x^2
        let field = Fq::new(2, 1).unwrap();
        let f4 = poly(&[1, 0, 1, 1]);
        for code in 0..8u64 {
            let (a0, a1, a2) = (code & 1, (code >> 1) & 1, (code >> 2) & 1);
            let g = Poly::from_coeffs(vec![a0, a1, a2]);
            let got = inv_substitute(&field, &g, &f4, 21).unwrap();
            let expect = Poly::from_coeffs(vec![
                field.add(a0, a2),
                field.add(a1, a2),
                a1,
            ]);
            assert_eq!(got, expect);
        }
        // constants are fixed
        let c = Poly::constant(1);
        assert_eq!(inv_substitute(&field, &c, &f4, 21).unwrap(), c);

        // (F_3, n=13): g_1(x^{-1}) = a0+2a1+a2 + a2 x + (a1+2a2) x^2 mod f_3 = x^3+2x+2
        let field = Fq::new(3, 1).unwrap();
        let f3 = poly(&[2, 2, 0, 1]);
        for code in 0..27u64 {
            let (a0, a1, a2) = (code % 3, code / 3 % 3, code / 9 % 3);
            let g = Poly::from_coeffs(vec![a0, a1, a2]);
            let got = inv_substitute(&field, &g, &f3, 13).unwrap();
            let expect = Poly::from_coeffs(vec![
                (a0 + 2 * a1 + a2) % 3,
                a2,
                (a1 + 2 * a2) % 3,
            ]);
            assert_eq!(got, expect);
        }
    }

    #[test]
    fn inv_substitute_is_involution_on_a() {
        let field = Fq::new(3, 1).unwrap();
        let xn1 = field.x_pow_n_minus_1(7);
        for code in 0..200u64 {
            let mut coeffs = Vec::new();
            let mut c = code;
            for _ in 0..7 {
                coeffs.push(c % 3);
                c /= 3;
            }
            let a = Poly::from_coeffs(coeffs);
            let once = inv_substitute(&field, &a, &xn1, 7).unwrap();
            let twice = inv_substitute(&field, &once, &xn1, 7).unwrap();
            assert_eq!(twice, a);
        }
    }

    #[test]
    fn embed_is_multiplicative() {
        let pr = profile(2, 21);
        let field = &pr.field;
        let i = 1; // f_1 = x^2+x+1
        let f1 = &pr.factors[i];
        let eps = primitive_idempotent(&pr, i).unwrap();
        assert_eq!(embed(&pr, i, &Poly::zero()).unwrap(), Poly::zero());
        assert_eq!(embed(&pr, i, &Poly::one()).unwrap(), eps);
        let xn1 = field.x_pow_n_minus_1(21);
        for a in residues(field, 2) {
            for b in residues(field, 2) {
                let lhs = field
                    .poly_mul_mod(
                        &embed(&pr, i, &a).unwrap(),
                        &embed(&pr, i, &b).unwrap(),
                        &xn1,
                    )
                    .unwrap();
                let rhs = embed(&pr, i, &field.poly_mul_mod(&a, &b, f1).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn primitive_element_examples() {
        let f2 = Fq::new(2, 1).unwrap();
        // K = F_2[x]/(x^2+x+1): x is primitive
        assert_eq!(
            primitive_element(&f2, &poly(&[1, 1, 1])).unwrap(),
            Poly::x()
        );
        // K = F_2 (d = 1): 1
        assert_eq!(
            primitive_element(&f2, &poly(&[1, 1])).unwrap(),
            Poly::one()
        );
        // K = F_3[x]/(x^4+x^3+x^2+x+1): 1+2x is primitive and (1+2x)^8 = 1+x+x^2+x^3
        let f3 = Fq::new(3, 1).unwrap();
        let f = poly(&[1, 1, 1, 1, 1]);
        let cand = poly(&[1, 2]);
        assert_eq!(
            multiplicative_order(&f3, &cand, &f).unwrap(),
            80
        );
        assert_eq!(
            f3.poly_pow_mod(&cand, 8, &f).unwrap(),
            poly(&[1, 1, 1, 1])
        );
    }

    #[test]
    fn norm_one_examples() {
        let f2 = Fq::new(2, 1).unwrap();
        let group = norm_one_subgroup(&f2, &poly(&[1, 1, 1])).unwrap();
        assert_eq!(group, vec![Poly::x(), Poly::one(), poly(&[1, 1])]);
        assert!(group.contains(&Poly::one()));

        let f3 = Fq::new(3, 1).unwrap();
        let group = norm_one_subgroup(&f3, &poly(&[1, 1, 1, 1, 1])).unwrap();
        assert_eq!(group.len(), 10);

        // odd degree rejected
        assert!(matches!(
            norm_one_subgroup(&f2, &poly(&[1, 1, 0, 1])),
            Err(Error::InvalidIndex(_))
        ));
    }

    #[test]
    fn norm_one_matches_exhaustive_filter() {
        for (q, n, f) in [
            (2u64, 21usize, poly(&[1, 1, 1])),
            (3, 10, poly(&[1, 1, 1, 1, 1])),
            (3, 10, poly(&[1, 2, 1, 2, 1])),
        ] {
            let field = Fq::from_order(q).unwrap();
            let d = f.degree().unwrap();
            let mut brute = Vec::new();
            for g in residues(&field, d) {
                if g.is_zero() {
                    continue;
                }
                let gbar = inv_substitute(&field, &g, &f, n).unwrap();
                if field.poly_mul_mod(&g, &gbar, &f).unwrap() == Poly::one() {
                    brute.push(g);
                }
            }
            brute.sort_by(|a, b| residue_cmp(a, b, d));
            let group = norm_one_subgroup(&field, &f).unwrap();
            assert_eq!(group, brute);
            let half = (q as u128).pow((d / 2) as u32);
            assert_eq!(group.len() as u128, half + 1);
        }
    }
}
