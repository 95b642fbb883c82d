//! Canonical descriptors of left dihedral codes: per-factor outer codes,
//! duality (dual, hull, classification), exact counts and enumeration.

use num_bigint::BigUint;
use num_traits::{One, Zero as _};

use crate::error::{Error, Result};
use crate::factor::FactorProfile;
use crate::field::{residues, Fq, Poly};
use crate::idempotent::{inv_substitute, norm_one_subgroup};

/// Outer code C_i over the residue field K_i = F_q[x]/(f_i).
///
/// Line specs are normalized to (g, 1), or (1, 0) at pair indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OuterSpec {
    Zero,
    Full,
    Line(Poly, Poly),
}

impl OuterSpec {
    /// dim_{K_i}(C_i): 0, 1 or 2.
    pub fn dim(&self) -> usize {
        match self {
            OuterSpec::Zero => 0,
            OuterSpec::Line(_, _) => 1,
            OuterSpec::Full => 2,
        }
    }

    fn line(g: Poly) -> OuterSpec {
        OuterSpec::Line(g, Poly::one())
    }

    fn swap_line() -> OuterSpec {
        OuterSpec::Line(Poly::one(), Poly::zero())
    }
}

/// A left D_2n-code, one outer spec per irreducible factor of x^n - 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeDescriptor {
    pub specs: Vec<OuterSpec>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DualityClass {
    All,
    Lcd,
    SelfOrthogonal,
    SelfDual,
}

impl DualityClass {
    pub fn parse(s: &str) -> Result<DualityClass> {
        match s {
            "all" => Ok(DualityClass::All),
            "lcd" => Ok(DualityClass::Lcd),
            "so" | "self-orthogonal" => Ok(DualityClass::SelfOrthogonal),
            "sd" | "self-dual" => Ok(DualityClass::SelfDual),
            other => Err(Error::InvalidInput(format!("unknown class '{other}'"))),
        }
    }
}

/// Dual of a single outer spec: Zero <-> Full; Line(g,1) -> Line(-g,1);
/// Line(1,0) -> Line(1,0).
fn spec_dual(field: &Fq, spec: &OuterSpec) -> OuterSpec {
    match spec {
        OuterSpec::Zero => OuterSpec::Full,
        OuterSpec::Full => OuterSpec::Zero,
        OuterSpec::Line(g1, g2) => {
            if g2.is_zero() {
                OuterSpec::Line(g1.clone(), g2.clone())
            } else {
                OuterSpec::Line(field.poly_neg(g1), g2.clone())
            }
        }
    }
}

fn spec_hull(field: &Fq, spec: &OuterSpec) -> OuterSpec {
    if *spec == spec_dual(field, spec) {
        spec.clone()
    } else {
        OuterSpec::Zero
    }
}

fn keep_for_class(field: &Fq, class: DualityClass, spec: &OuterSpec) -> bool {
    match class {
        DualityClass::All => true,
        DualityClass::Lcd => spec_hull(field, spec) == OuterSpec::Zero,
        DualityClass::SelfOrthogonal => spec_hull(field, spec) == *spec,
        DualityClass::SelfDual => spec_dual(field, spec) == *spec,
    }
}

/// Option list at a self-reciprocal index i (0 <= i <= r) for a duality class.
pub fn allowed_specs(
    profile: &FactorProfile,
    i: usize,
    class: DualityClass,
) -> Result<Vec<OuterSpec>> {
    let field = &profile.field;
    if i > profile.r {
        return Err(Error::InvalidIndex(format!(
            "index {i} is a pair index; use allowed_pair_specs"
        )));
    }
    if class == DualityClass::SelfDual && field.q() % 2 == 1 {
        return Err(Error::NoSelfDualExists);
    }
    let mut base = vec![OuterSpec::Zero, OuterSpec::Full];
    if profile.in_i0(i) {
        base.push(OuterSpec::line(Poly::one()));
        if field.q() % 2 == 1 {
            base.push(OuterSpec::line(Poly::constant(field.neg(field.one()))));
        }
    } else {
        for g in norm_one_subgroup(field, &profile.factors[i])? {
            base.push(OuterSpec::line(g));
        }
    }
    Ok(base
        .into_iter()
        .filter(|s| keep_for_class(field, class, s))
        .collect())
}

/// Joint option list for the reciprocal pair (r+j, r+j+t), 1 <= j <= t.
pub fn allowed_pair_specs(
    profile: &FactorProfile,
    j: usize,
    class: DualityClass,
) -> Result<Vec<(OuterSpec, OuterSpec)>> {
    let field = &profile.field;
    if j == 0 || j > profile.t {
        return Err(Error::InvalidIndex(format!(
            "pair index {j} out of range 1..={}",
            profile.t
        )));
    }
    if class == DualityClass::SelfDual && field.q() % 2 == 1 {
        return Err(Error::NoSelfDualExists);
    }
    let (i, it) = profile.pair_indices(j);
    let d = profile.degrees[i];
    let mut base = vec![
        (OuterSpec::Zero, OuterSpec::Zero),
        (OuterSpec::Full, OuterSpec::Full),
        (OuterSpec::swap_line(), OuterSpec::line(Poly::zero())),
    ];
    for g in residues(field, d) {
        let partner = pair_partner(profile, &g, it)?;
        base.push((OuterSpec::line(g), partner));
    }
    Ok(base
        .into_iter()
        .filter(|(a, b)| keep_for_class(field, class, a) && keep_for_class(field, class, b))
        .collect())
}

/// Normalized G_{i+t} = (1, g(x^{-1})) determined by G_i = (g, 1).
fn pair_partner(profile: &FactorProfile, g: &Poly, it: usize) -> Result<OuterSpec> {
    let field = &profile.field;
    let gbar = inv_substitute(field, g, &profile.factors[it], profile.n)?;
    if gbar.is_zero() {
        Ok(OuterSpec::swap_line())
    } else {
        Ok(OuterSpec::line(field.poly_invert_mod(&gbar, &profile.factors[it])?))
    }
}

/// Euclidean dual descriptor. Involution; componentwise per factor.
pub fn dual(profile: &FactorProfile, desc: &CodeDescriptor) -> Result<CodeDescriptor> {
    check_shape(profile, desc)?;
    Ok(CodeDescriptor {
        specs: desc
            .specs
            .iter()
            .map(|s| spec_dual(&profile.field, s))
            .collect(),
    })
}

/// Euclidean hull descriptor: per index, G_i if G_i equals its dual, else Zero.
pub fn hull(profile: &FactorProfile, desc: &CodeDescriptor) -> Result<CodeDescriptor> {
    check_shape(profile, desc)?;
    Ok(CodeDescriptor {
        specs: desc
            .specs
            .iter()
            .map(|s| spec_hull(&profile.field, s))
            .collect(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    pub lcd: bool,
    pub self_orthogonal: bool,
    pub self_dual: bool,
}

pub fn classify(profile: &FactorProfile, desc: &CodeDescriptor) -> Result<Classification> {
    let h = hull(profile, desc)?;
    let d = dual(profile, desc)?;
    Ok(Classification {
        lcd: h.specs.iter().all(|s| *s == OuterSpec::Zero),
        self_orthogonal: h == *desc,
        self_dual: d == *desc,
    })
}

/// dim_{F_q}(C) = sum d_i * dim_{K_i}(C_i).
pub fn dim(profile: &FactorProfile, desc: &CodeDescriptor) -> Result<usize> {
    check_shape(profile, desc)?;
    Ok(desc
        .specs
        .iter()
        .zip(&profile.degrees)
        .map(|(s, d)| s.dim() * d)
        .sum())
}

fn check_shape(profile: &FactorProfile, desc: &CodeDescriptor) -> Result<()> {
    if desc.specs.len() != profile.num_factors() {
        return Err(Error::InvalidInput(format!(
            "descriptor has {} specs, profile has {} factors",
            desc.specs.len(),
            profile.num_factors()
        )));
    }
    Ok(())
}

/// Membership check against the theorem option tables (class All).
pub fn validate(profile: &FactorProfile, desc: &CodeDescriptor) -> Result<()> {
    check_shape(profile, desc)?;
    for i in 0..=profile.r {
        let opts = allowed_specs(profile, i, DualityClass::All)?;
        if !opts.contains(&desc.specs[i]) {
            return Err(Error::InvalidInput(format!(
                "spec at index {i} is not an allowed outer code"
            )));
        }
    }
    for j in 1..=profile.t {
        let (i, it) = profile.pair_indices(j);
        let opts = allowed_pair_specs(profile, j, DualityClass::All)?;
        let joint = (desc.specs[i].clone(), desc.specs[it].clone());
        if !opts.contains(&joint) {
            return Err(Error::InvalidInput(format!(
                "pair specs at indices ({i}, {it}) are not an allowed joint option"
            )));
        }
    }
    Ok(())
}

/// Closed-form count of left D_2n-codes in a duality class. Never enumerates.
pub fn count(profile: &FactorProfile, class: DualityClass) -> Result<BigUint> {
    let q = BigUint::from(profile.field.q());
    let q_even = profile.field.q() % 2 == 0;
    let qpow = |e: usize| q.pow(e as u32);
    let mid: Vec<usize> = profile.mid_indices().into_iter().map(|i| profile.degrees[i]).collect();
    let pairs: Vec<usize> = (1..=profile.t)
        .map(|j| profile.degrees[profile.pair_indices(j).0])
        .collect();
    let i0 = if profile.n % 2 == 0 { 2u32 } else { 1 };
    let acc = |init: BigUint, mids: &dyn Fn(usize) -> BigUint, prs: &dyn Fn(usize) -> BigUint| {
        let mut v = init;
        for &d in &mid {
            v *= mids(d);
        }
        for &d in &pairs {
            v *= prs(d);
        }
        v
    };
    let total = match class {
        DualityClass::All => {
            let base = if q_even { BigUint::from(3u32) } else { BigUint::from(4u32).pow(i0) };
            acc(base, &|d| qpow(d / 2) + 3u32, &|d| qpow(d) + 3u32)
        }
        DualityClass::Lcd => {
            if q_even {
                BigUint::from(2u32).pow((1 + profile.r + profile.t) as u32)
            } else {
                let base = BigUint::from(4u32).pow(i0);
                acc(base, &|d| qpow(d / 2) + 3u32, &|d| qpow(d) + 1u32)
            }
        }
        DualityClass::SelfOrthogonal => {
            if q_even {
                acc(BigUint::from(2u32), &|d| qpow(d / 2) + 2u32, &|d| qpow(d) + 2u32)
            } else {
                BigUint::from(3u32).pow(profile.t as u32)
            }
        }
        DualityClass::SelfDual => {
            if q_even {
                acc(BigUint::one(), &|d| qpow(d / 2) + 1u32, &|d| qpow(d) + 1u32)
            } else {
                BigUint::zero()
            }
        }
    };
    Ok(total)
}

/// One enumeration position: either a single self-reciprocal index or a
/// reciprocal pair filled jointly.
struct Group {
    slots: Vec<usize>,
    options: Vec<Vec<OuterSpec>>,
}

fn option_groups(profile: &FactorProfile, class: DualityClass) -> Result<Vec<Group>> {
    let mut groups = Vec::new();
    for i in 0..=profile.r {
        groups.push(Group {
            slots: vec![i],
            options: allowed_specs(profile, i, class)?
                .into_iter()
                .map(|s| vec![s])
                .collect(),
        });
    }
    for j in 1..=profile.t {
        let (i, it) = profile.pair_indices(j);
        groups.push(Group {
            slots: vec![i, it],
            options: allowed_pair_specs(profile, j, class)?
                .into_iter()
                .map(|(a, b)| vec![a, b])
                .collect(),
        });
    }
    Ok(groups)
}

/// Lazy stream over every descriptor of a class, in canonical order:
/// index-major (first factor most significant), option-minor, pairs joint.
pub struct DescriptorIter {
    groups: Vec<Group>,
    num_specs: usize,
    digits: Vec<usize>,
    done: bool,
}

impl DescriptorIter {
    pub fn total(&self) -> BigUint {
        self.groups
            .iter()
            .fold(BigUint::one(), |acc, g| acc * BigUint::from(g.options.len()))
    }

    fn assemble(&self) -> CodeDescriptor {
        let mut specs = vec![OuterSpec::Zero; self.num_specs];
        for (g, &d) in self.groups.iter().zip(&self.digits) {
            for (slot, spec) in g.slots.iter().zip(&g.options[d]) {
                specs[*slot] = spec.clone();
            }
        }
        CodeDescriptor { specs }
    }
}

impl Iterator for DescriptorIter {
    type Item = CodeDescriptor;

    fn next(&mut self) -> Option<CodeDescriptor> {
        if self.done {
            return None;
        }
        let out = self.assemble();
        // last group varies fastest
        let mut pos = self.groups.len();
        loop {
            if pos == 0 {
                self.done = true;
                break;
            }
            pos -= 1;
            self.digits[pos] += 1;
            if self.digits[pos] < self.groups[pos].options.len() {
                break;
            }
            self.digits[pos] = 0;
        }
        Some(out)
    }
}

pub fn enumerate(profile: &FactorProfile, class: DualityClass) -> Result<DescriptorIter> {
    let groups = option_groups(profile, class)?;
    let done = groups.iter().any(|g| g.options.is_empty());
    Ok(DescriptorIter {
        digits: vec![0; groups.len()],
        num_specs: profile.num_factors(),
        groups,
        done,
    })
}

/// Descriptor at a given serial number in the canonical enumeration order,
/// without streaming. None when the index is out of range.
pub fn descriptor_at(
    profile: &FactorProfile,
    class: DualityClass,
    index: &BigUint,
) -> Result<Option<CodeDescriptor>> {
    let iter = enumerate(profile, class)?;
    if *index >= iter.total() {
        return Ok(None);
    }
    let mut rem = index.clone();
    let mut it = iter;
    for pos in (0..it.groups.len()).rev() {
        let radix = BigUint::from(it.groups[pos].options.len());
        let digit = (&rem % &radix)
            .try_into()
            .expect("digit fits in usize");
        it.digits[pos] = digit;
        rem /= &radix;
    }
    Ok(Some(it.assemble()))
}
