//! The algebra `Ш(k)` with basis `z_i = 1^{⊗(i+1)}`, its quotients
//! `Ш(k)/I_m` where `I_m` is spanned by the `z_i` with `i ≥ m`, the shift
//! operator `P(z_i) = z_{i+1}`, and the derivation `d(z_i) = z_{i−1}`.
//!
//! Elements of a quotient are stored densely over `z̄_0..z̄_{m−1}`; elements of
//! the full algebra are stored densely up to their last nonzero coefficient.

use std::fmt;

use num_traits::{One, Signed, Zero};
use rand::{Rng, RngCore};

use crate::algebra::{Algebra, Based, LinearOperator, Sample, SampleBasis};
use crate::error::{parse_error, Error, Result};
use crate::scalar::{binomial_scalar, int, join_signed, parse_scalar, pow, Scalar};

/// Largest basis index used when sampling elements of the full algebra.
pub const SAMPLE_SUPPORT_INFINITE: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DPElement {
    modulus: Option<usize>,
    coeffs: Vec<Scalar>,
}

impl DPElement {
    pub fn zero(modulus: Option<usize>) -> Self {
        Self {
            modulus,
            coeffs: Vec::new(),
        }
    }

    /// Coefficients at indices `≥ modulus` are dropped.
    pub fn from_coeffs(modulus: Option<usize>, mut coeffs: Vec<Scalar>) -> Self {
        if let Some(m) = modulus {
            coeffs.truncate(m);
        }
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { modulus, coeffs }
    }

    pub fn from_ints(modulus: Option<usize>, coeffs: &[i64]) -> Self {
        Self::from_coeffs(modulus, coeffs.iter().copied().map(int).collect())
    }

    /// `c·z_i`, which is zero when `i` lies in the ideal.
    pub fn term(modulus: Option<usize>, i: usize, c: Scalar) -> Self {
        let mut coeffs = vec![Scalar::zero(); i + 1];
        coeffs[i] = c;
        Self::from_coeffs(modulus, coeffs)
    }

    pub fn basis(modulus: Option<usize>, i: usize) -> Self {
        Self::term(modulus, i, Scalar::one())
    }

    pub fn modulus(&self) -> Option<usize> {
        self.modulus
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    fn check_modulus(&self, other: &Self) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch {
                left: modulus_text(self.modulus),
                right: modulus_text(other.modulus),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_modulus(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) + other.coeff(i)).collect();
        Ok(Self::from_coeffs(self.modulus, coeffs))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self::from_coeffs(self.modulus, self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Parses the rendered form, e.g. `"2·z0 - 3/2·z2"`. `*` may replace `·`,
    /// a missing coefficient means 1, and a bare rational is a multiple of
    /// `z0`. Indices past the modulus are projected to zero.
    pub fn parse(modulus: Option<usize>, text: &str) -> Result<Self> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(parse_error("divided-power element", text, "empty input"));
        }
        let chars: Vec<char> = compact.chars().collect();
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut current = String::new();
        let mut negative = false;
        for (pos, &ch) in chars.iter().enumerate() {
            let after_slash = pos > 0 && chars[pos - 1] == '/';
            if (ch == '+' || ch == '-') && !after_slash {
                if !current.is_empty() {
                    terms.push((negative, std::mem::take(&mut current)));
                    negative = false;
                }
                if ch == '-' {
                    negative = !negative;
                }
            } else {
                current.push(ch);
            }
        }
        terms.push((negative, current));

        let mut acc = Self::zero(modulus);
        for (negative, body) in terms {
            if body.is_empty() {
                return Err(parse_error("divided-power element", text, "empty term"));
            }
            let (coeff_text, index) = match body.find('z') {
                Some(zpos) => {
                    let idx = body[zpos + 1..]
                        .parse::<usize>()
                        .map_err(|_| parse_error("divided-power element", text, format!("bad index in {body:?}")))?;
                    let c = body[..zpos].trim_end_matches(['·', '*']);
                    (c.to_string(), idx)
                }
                None => (body.clone(), 0),
            };
            let mut c = if coeff_text.is_empty() {
                Scalar::one()
            } else {
                parse_scalar(&coeff_text)
                    .map_err(|_| parse_error("divided-power element", text, format!("bad coefficient in {body:?}")))?
            };
            if negative {
                c = -c;
            }
            acc = acc.try_add(&Self::term(modulus, index, c))?;
        }
        Ok(acc)
    }
}

fn modulus_text(m: Option<usize>) -> String {
    match m {
        Some(m) => format!("Ш(k)/I_{m}"),
        None => "Ш(k)".to_string(),
    }
}

impl fmt::Display for DPElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<(bool, String)> = self
            .terms()
            .map(|(i, c)| {
                let a = c.abs();
                let body = if a.is_one() {
                    format!("z{i}")
                } else {
                    format!("{a}·z{i}")
                };
                (c.is_negative(), body)
            })
            .collect();
        f.write_str(&join_signed(&terms))
    }
}

/// Expansion of `z_m z_n = Σ_j C(m+n−j, n) C(n, j) λ^j z_{m+n−j}` as
/// `(index, coefficient)` pairs, in the full algebra.
pub fn basis_product(m: usize, n: usize, weight: &Scalar) -> Vec<(usize, Scalar)> {
    (0..=m.min(n))
        .filter(|&j| j == 0 || !weight.is_zero())
        .map(|j| {
            let c = binomial_scalar(m + n - j, n) * binomial_scalar(n, j) * pow(weight, j);
            (m + n - j, c)
        })
        .collect()
}

/// Weight-`λ` product. Computed in the full algebra and then projected to the
/// quotient, which is sound because `I_m` is an ideal.
pub fn dp_mul(u: &DPElement, v: &DPElement, weight: &Scalar) -> Result<DPElement> {
    u.check_modulus(v)?;
    let limit = u.modulus;
    let mut out: Vec<Scalar> = Vec::new();
    for (m, cu) in u.terms() {
        for (n, cv) in v.terms() {
            // every term of z_m z_n has index ≥ max(m, n)
            if limit.is_some_and(|l| m.max(n) >= l) {
                continue;
            }
            for (idx, c) in basis_product(m, n, weight) {
                if limit.is_some_and(|l| idx >= l) {
                    continue;
                }
                if out.len() <= idx {
                    out.resize(idx + 1, Scalar::zero());
                }
                out[idx] += c * cu * cv;
            }
        }
    }
    Ok(DPElement::from_coeffs(limit, out))
}

/// `P(z_i) = z_{i+1}`; in `Ш(k)/I_m` the top coefficient falls into the ideal.
pub fn dp_p(u: &DPElement) -> DPElement {
    if u.is_zero() {
        return u.clone();
    }
    let mut coeffs = Vec::with_capacity(u.coeffs.len() + 1);
    coeffs.push(Scalar::zero());
    coeffs.extend(u.coeffs.iter().cloned());
    DPElement::from_coeffs(u.modulus, coeffs)
}

/// `d(z_0) = 0`, `d(z_n) = z_{n−1}`.
pub fn dp_d(u: &DPElement) -> DPElement {
    DPElement::from_coeffs(u.modulus, u.coeffs.iter().skip(1).cloned().collect())
}

/// `Ш(k)` (modulus `None`) or `Ш(k)/I_m` with the weight-`λ` product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DividedPower {
    modulus: Option<usize>,
    weight: Scalar,
}

impl DividedPower {
    pub fn full(weight: Scalar) -> Self {
        Self {
            modulus: None,
            weight,
        }
    }

    /// # Panics
    /// If `m == 0`; the quotient by `I_0` is the zero ring.
    pub fn quotient(m: usize, weight: Scalar) -> Self {
        assert!(m > 0, "quotient modulus must be positive");
        Self {
            modulus: Some(m),
            weight,
        }
    }

    pub fn modulus(&self) -> Option<usize> {
        self.modulus
    }

    pub fn weight(&self) -> &Scalar {
        &self.weight
    }

    pub fn z(&self, i: usize) -> DPElement {
        DPElement::basis(self.modulus, i)
    }

    pub fn element(&self, coeffs: &[i64]) -> DPElement {
        DPElement::from_ints(self.modulus, coeffs)
    }

    pub fn parse(&self, text: &str) -> Result<DPElement> {
        DPElement::parse(self.modulus, text)
    }

    /// The Rota-Baxter operator `P` (written `P̄` on quotients).
    pub fn rota_baxter_operator(&self) -> LinearOperator<Self> {
        LinearOperator::new(self.clone(), "P", dp_p)
    }

    /// The shift-down map. It is a weight-`λ` differential operator on the
    /// full algebra only: it does not preserve `I_m`.
    pub fn derivation(&self) -> LinearOperator<Self> {
        LinearOperator::new(self.clone(), "d", dp_d)
    }
}

impl Algebra for DividedPower {
    type Elem = DPElement;

    fn describe(&self) -> String {
        format!("{} (weight {})", modulus_text(self.modulus), self.weight)
    }

    fn zero(&self) -> DPElement {
        DPElement::zero(self.modulus)
    }

    fn one(&self) -> DPElement {
        self.z(0)
    }

    fn add(&self, a: &DPElement, b: &DPElement) -> DPElement {
        a.try_add(b).expect("operands belong to this carrier")
    }

    fn scale(&self, c: &Scalar, a: &DPElement) -> DPElement {
        a.scale(c)
    }

    fn mul(&self, a: &DPElement, b: &DPElement) -> DPElement {
        dp_mul(a, b, &self.weight).expect("operands belong to this carrier")
    }

    fn elem_eq(&self, a: &DPElement, b: &DPElement) -> bool {
        a.coeffs == b.coeffs
    }

    fn contains(&self, a: &DPElement) -> bool {
        a.modulus == self.modulus
    }

    fn render(&self, a: &DPElement) -> String {
        a.to_string()
    }

    fn is_zero(&self, a: &DPElement) -> bool {
        a.is_zero()
    }
}

impl Based for DividedPower {
    type Basis = usize;

    fn decompose(&self, a: &DPElement) -> Vec<(usize, Scalar)> {
        a.terms().map(|(i, c)| (i, c.clone())).collect()
    }

    fn basis_element(&self, b: &usize) -> DPElement {
        self.z(*b)
    }

    fn render_basis(&self, b: &usize) -> String {
        format!("z{b}")
    }
}

impl Sample for DividedPower {
    fn sample(&self, rng: &mut dyn RngCore) -> DPElement {
        let len = self.modulus.unwrap_or(SAMPLE_SUPPORT_INFINITE);
        let coeffs = (0..len).map(|_| int(rng.gen_range(-5..=5))).collect();
        DPElement::from_coeffs(self.modulus, coeffs)
    }
}

impl SampleBasis for DividedPower {
    fn sample_basis(&self, rng: &mut dyn RngCore) -> usize {
        rng.gen_range(0..self.modulus.unwrap_or(SAMPLE_SUPPORT_INFINITE))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{check_diff_axiom, check_rb_axiom};
    use crate::scalar::ratio;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn weights() -> Vec<Scalar> {
        vec![int(0), int(1), int(-2), ratio(3, 5)]
    }

    #[test]
    fn product_examples() {
        let full = DividedPower::full(int(0));
        assert_eq!(full.mul(&full.z(2), &full.z(3)), full.z(5).scale(&int(10)));
        for lambda in weights() {
            let alg = DividedPower::full(lambda.clone());
            for n in 0..6 {
                assert_eq!(alg.mul(&alg.z(0), &alg.z(n)), alg.z(n));
            }
            let expected = alg.add(&alg.z(2).scale(&int(2)), &alg.z(1).scale(&lambda));
            assert_eq!(alg.mul(&alg.z(1), &alg.z(1)), expected);
        }
    }

    #[test]
    fn modulus_mismatch_is_an_error() {
        let a = DPElement::basis(Some(2), 0);
        let b = DPElement::basis(Some(3), 0);
        assert!(matches!(dp_mul(&a, &b, &int(0)), Err(Error::ModulusMismatch { .. })));
    }

    #[test]
    fn shift_operator_examples() {
        let q2 = DividedPower::quotient(2, int(0));
        assert_eq!(dp_p(&q2.z(0)), q2.z(1));
        assert!(dp_p(&q2.z(1)).is_zero());
        assert!(dp_p(&q2.zero()).is_zero());
        let q3 = DividedPower::quotient(3, int(0));
        assert_eq!(dp_p(&q3.element(&[2, 0, 3])), q3.element(&[0, 2]));
    }

    #[test]
    fn derivation_examples() {
        let full = DividedPower::full(int(0));
        assert!(dp_d(&full.z(0)).is_zero());
        assert_eq!(dp_d(&full.z(5)), full.z(4));
        let q4 = DividedPower::quotient(4, int(0));
        assert_eq!(dp_d(&q4.element(&[0, 1, 0, 4])), q4.element(&[1, 0, 4]));
    }

    #[test]
    fn quotient_projects_products() {
        let q3 = DividedPower::quotient(3, int(1));
        // z1 z1 = 2 z2 + z1, z1 z2 = 3 z3 + 2 z2 -> 2 z2 in the quotient
        assert_eq!(q3.mul(&q3.z(1), &q3.z(2)), q3.z(2).scale(&int(2)));
        assert!(q3.z(3).is_zero());
    }

    #[test]
    fn render_and_parse() {
        let q4 = DividedPower::quotient(4, int(0));
        let e = DPElement::from_coeffs(Some(4), vec![int(2), int(0), ratio(-3, 2), int(1)]);
        assert_eq!(e.to_string(), "2·z0 - 3/2·z2 + z3");
        assert_eq!(q4.parse(&e.to_string()).unwrap(), e);
        assert_eq!(q4.parse("1*z1 + -1/3·z2").unwrap().coeff(2), ratio(-1, 3));
        assert_eq!(q4.parse("5").unwrap(), q4.z(0).scale(&int(5)));
        assert!(q4.parse("z9").unwrap().is_zero());
        assert!(q4.parse("2·zq").is_err());
        assert_eq!(q4.zero().to_string(), "0");
    }

    #[test]
    fn identity_is_not_rota_baxter() {
        let q3 = DividedPower::quotient(3, int(0));
        let id = LinearOperator::identity(q3.clone());
        let out = check_rb_axiom(&id, &int(0), &[(q3.z(0), q3.z(0))]).unwrap();
        assert_eq!(out.witness().unwrap().defect, q3.z(0).scale(&int(-1)));
    }

    #[test]
    fn shift_up_is_not_a_derivation() {
        let q4 = DividedPower::quotient(4, int(0));
        let out = check_diff_axiom(&q4.rota_baxter_operator(), &int(0), &[(q4.z(0), q4.z(0))]);
        // P(z0) = z1 ≠ 0 already breaks d(1) = 0
        assert!(!out.unwrap().passed());
    }

    #[test]
    fn shift_down_does_not_descend_to_quotients() {
        let q3 = DividedPower::quotient(3, int(0));
        let out = check_diff_axiom(&q3.derivation(), &int(0), &[(q3.z(2), q3.z(1))]).unwrap();
        let w = out.witness().unwrap();
        assert_eq!(w.defect, q3.z(2).scale(&int(-3)));
    }

    #[test]
    fn quotient_shift_is_rota_baxter_for_all_weights() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for lambda in weights() {
            for m in 1..=5 {
                let alg = DividedPower::quotient(m, lambda.clone());
                let samples: Vec<_> = (0..50).map(|_| (alg.sample(&mut rng), alg.sample(&mut rng))).collect();
                let out = check_rb_axiom(&alg.rota_baxter_operator(), &lambda, &samples).unwrap();
                assert!(out.passed(), "m={m} λ={lambda}: {:?}", out.witness());
            }
        }
    }

    #[test]
    fn full_shift_down_is_a_weighted_derivation() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for lambda in weights() {
            let alg = DividedPower::full(lambda.clone());
            let samples: Vec<_> = (0..50).map(|_| (alg.sample(&mut rng), alg.sample(&mut rng))).collect();
            let out = check_diff_axiom(&alg.derivation(), &lambda, &samples).unwrap();
            assert!(out.passed(), "λ={lambda}: {:?}", out.witness());
        }
    }
}
