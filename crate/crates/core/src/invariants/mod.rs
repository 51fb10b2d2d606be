//! One-stop invariant computation: every quantity the deduction rules
//! consume, assembled per diagram with the known cross-identities between
//! them enforced at construction time. A value that fails an identity is a
//! bug somewhere upstream, so assembly errors out rather than returning
//! anything.

mod bracket;
mod goeritz;
mod jones;
mod qpoly;

pub use bracket::{
    bracket_recursive, bracket_state_sum, kauffman_bracket, loop_value, STATE_SUM_CAP,
};
pub use goeritz::{goeritz, link_determinant, signature, GoeritzData};
pub use jones::{evaluate_jones, jones, jones_with_writhe, special_values, SpecialValues};
pub use qpoly::{q_polynomial, q_polynomial_with_budget, split_factor, QError, DEFAULT_DEPTH};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::algebra::{
    classify_golden, classify_omega, smith_normal_form, Cyclo12, GoldenClass, GoldenValue,
    LaurentPoly, OmegaClass,
};
use crate::diagram::{DiagramError, PlanarDiagram};

/// Crossing count above which the `Q` polynomial is skipped (`None`); its
/// resolution tree is the one exponential corner here. Composite inputs
/// combine factor-by-factor instead, so nothing tabulated hits the cap.
pub const Q_CROSSING_CAP: usize = 13;

#[derive(Debug, thiserror::Error)]
pub enum InvariantError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    QBudget(#[from] QError),
    #[error("cross-check failed: {0}")]
    Inconsistent(String),
}

/// The full invariant profile of one link.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantSet {
    pub components: usize,
    /// Jones polynomial in `q = t^(1/2)`.
    pub jones: LaurentPoly,
    /// `V(e^{i pi/3})`.
    pub v_omega: Cyclo12,
    /// `v_omega` matched against `± i^{c-1} (i sqrt3)^delta`.
    pub omega_class: OmegaClass,
    /// `V(-1)` (Gaussian for links).
    pub v_minus_one: Cyclo12,
    /// `V(i)` for knots, always `±1`.
    pub v_i: Option<i128>,
    /// Arf invariant for knots: `V(i) = (-1)^arf`.
    pub arf: Option<u8>,
    pub determinant: u64,
    pub signature: i64,
    /// `Q` polynomial in `z`; `None` above [`Q_CROSSING_CAP`] crossings.
    pub q_poly: Option<LaurentPoly>,
    /// `Q((sqrt5 - 1)/2)`, exactly.
    pub lambda: Option<GoldenValue>,
    /// `lambda` matched against `± sqrt5 ^ n`.
    pub lambda_class: Option<GoldenClass>,
    /// Invariant factors of `H_1` of the double branched cover (non-unit,
    /// zeros included).
    pub h1_factors: Vec<BigInt>,
    /// Minimal generator count of that homology group.
    pub h1_generators: usize,
    /// Its mod-3 rank.
    pub h1_rank_mod3: u32,
    /// Its mod-5 rank.
    pub h1_rank_mod5: u32,
}

/// Compute every invariant of `d` and verify the profile's internal
/// identities.
pub fn invariants(d: &PlanarDiagram) -> Result<InvariantSet, InvariantError> {
    let pieces = d.connected_pieces();
    let k = pieces.len();
    let mut components = 0usize;
    let mut jones_poly = LaurentPoly::one();
    let mut sig = 0i64;
    let mut h1_raw: Vec<BigInt> = Vec::new();
    let mut q: Option<LaurentPoly> = Some(LaurentPoly::one());

    for piece in &pieces {
        components += piece.component_count();
        jones_poly = &jones_poly * &jones::jones(piece);
        let gz = goeritz::goeritz(piece)?;
        sig += gz.signature;
        h1_raw.extend(gz.h1_factors);
        q = match q {
            Some(acc) if piece.crossing_count() <= Q_CROSSING_CAP => {
                Some(&acc * &qpoly::q_polynomial(piece)?)
            }
            _ => None,
        };
    }

    if k > 1 {
        // Split pieces: V gains (-q - q^-1) per extra piece, Q gains
        // (2z^-1 - 1), and the double cover homology a free factor.
        let vfac = LaurentPoly::from_terms([(1, -1), (-1, -1)]).pow(k as u32 - 1);
        jones_poly = &jones_poly * &vfac;
        q = q.map(|p| &p * &qpoly::split_factor().pow(k as u32 - 1));
        h1_raw.extend(std::iter::repeat_n(BigInt::zero(), k - 1));
    }

    assemble(components, jones_poly, sig, h1_raw, q)
}

/// Combine two verified profiles along a connected sum (both sides must be
/// knots for the composite to be one; callers enforce that).
pub fn connected_sum_sets(
    a: &InvariantSet,
    b: &InvariantSet,
) -> Result<InvariantSet, InvariantError> {
    let q = match (&a.q_poly, &b.q_poly) {
        (Some(x), Some(y)) => Some(x * y),
        _ => None,
    };
    let mut h1 = a.h1_factors.clone();
    h1.extend(b.h1_factors.iter().cloned());
    assemble(
        a.components + b.components - 1,
        &a.jones * &b.jones,
        a.signature + b.signature,
        h1,
        q,
    )
}

fn assemble(
    components: usize,
    jones_poly: LaurentPoly,
    signature: i64,
    h1_raw: Vec<BigInt>,
    q_poly: Option<LaurentPoly>,
) -> Result<InvariantSet, InvariantError> {
    let h1_factors = normalize_factors(h1_raw);
    let h1_generators = h1_factors.len();
    let h1_rank_mod3 = h1_factors.iter().filter(|f| divides(3, f)).count() as u32;
    let h1_rank_mod5 = h1_factors.iter().filter(|f| divides(5, f)).count() as u32;

    let determinant = {
        let prod = h1_factors
            .iter()
            .fold(BigInt::from(1), |acc, f| acc * f)
            .abs();
        u64::try_from(&prod)
            .map_err(|_| InvariantError::Inconsistent(format!("determinant {prod} overflows")))?
    };

    let evals = jones::evaluate_jones(&jones_poly, components);
    let v_omega = evals.at_omega;
    let v_minus_one = evals.at_minus_one;

    // V(1) counts components.
    let at_one = jones_poly.eval_at_one();
    if at_one != (-2i128).pow(components as u32 - 1) {
        return Err(InvariantError::Inconsistent(format!(
            "V(1) = {at_one} but the diagram has {components} components"
        )));
    }

    // |V(-1)| is the determinant.
    let norm = (v_minus_one * v_minus_one.conj())
        .as_int()
        .expect("|V(-1)|^2 is a rational integer");
    if norm != (determinant as i128) * (determinant as i128) {
        return Err(InvariantError::Inconsistent(format!(
            "|V(-1)|^2 = {norm} but the Goeritz determinant is {determinant}"
        )));
    }

    // |V(omega)| = sqrt3 ^ (mod-3 rank of the double cover homology).
    let omega_class = classify_omega(v_omega, components as u32, h1_rank_mod3 + 1);
    match omega_class {
        OmegaClass::OfForm { delta, .. } if delta == h1_rank_mod3 => {}
        _ => {
            return Err(InvariantError::Inconsistent(format!(
                "V(omega) = {v_omega} does not match mod-3 rank {h1_rank_mod3}"
            )))
        }
    }

    let (v_i, arf) = match evals.at_i {
        Some(v) => match v.as_int() {
            Some(1) => (Some(1), Some(0)),
            Some(-1) => (Some(-1), Some(1)),
            _ => {
                return Err(InvariantError::Inconsistent(format!(
                    "V(i) = {v} is not ±1 on a knot"
                )))
            }
        },
        None => (None, None),
    };

    if components == 1 {
        // Knot signatures are even and carry the sign of V(-1).
        if signature.rem_euclid(2) != 0 {
            return Err(InvariantError::Inconsistent(format!(
                "knot signature {signature} is odd"
            )));
        }
        let v = v_minus_one.as_int().expect("V(-1) is an integer on knots");
        let want = if (signature / 2).rem_euclid(2) == 0 { 1 } else { -1 };
        if v.signum() != want {
            return Err(InvariantError::Inconsistent(format!(
                "sign of V(-1) = {v} disagrees with signature {signature}"
            )));
        }
    }

    let lambda = q_poly.as_ref().map(GoldenValue::eval_zpoly);
    let lambda_class = lambda.map(|l| {
        let class = classify_golden(l);
        if let GoldenClass::OfForm { n, .. } = class {
            if n != h1_rank_mod5 {
                return Err(InvariantError::Inconsistent(format!(
                    "|Q(golden)| = sqrt5^{n} but the mod-5 rank is {h1_rank_mod5}"
                )));
            }
        } else {
            return Err(InvariantError::Inconsistent(format!(
                "Q(golden) = {l} is not ± a power of sqrt5"
            )));
        }
        Ok(class)
    });
    let lambda_class = match lambda_class {
        Some(r) => Some(r?),
        None => None,
    };

    Ok(InvariantSet {
        components,
        jones: jones_poly,
        v_omega,
        omega_class,
        v_minus_one,
        v_i,
        arf,
        determinant,
        signature,
        q_poly,
        lambda,
        lambda_class,
        h1_factors,
        h1_generators,
        h1_rank_mod3,
        h1_rank_mod5,
    })
}

/// Renormalize a bag of cyclic orders into an invariant-factor chain (each
/// divides the next) via the Smith form of the diagonal matrix.
fn normalize_factors(raw: Vec<BigInt>) -> Vec<BigInt> {
    if raw.len() <= 1 {
        return raw.into_iter().map(|f| f.abs()).collect();
    }
    let n = raw.len();
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for (i, f) in raw.into_iter().enumerate() {
        m[i][i] = f;
    }
    smith_normal_form(&m).nontrivial_factors()
}

fn divides(p: u32, f: &BigInt) -> bool {
    (f % p).is_zero()
}
