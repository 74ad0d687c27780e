use std::collections::BTreeSet;

use super::field::PrimeField;
use super::linalg::row_reduce;
use super::poly::FpMultiPoly;
use crate::error::{Error, Result};

fn coordinates(field: PrimeField, gens: &[&FpMultiPoly]) -> Result<Vec<Vec<u64>>> {
    for g in gens {
        if g.p() != field.p() {
            return Err(Error::input(format!("polynomial over F_{} where F_{} was expected", g.p(), field.p())));
        }
        if !g.is_homogeneous_of_degree(2) {
            return Err(Error::input(format!("{g} is not a homogeneous quadratic")));
        }
    }
    let monomials: Vec<&Vec<u32>> =
        gens.iter().flat_map(|g| g.terms().keys()).collect::<BTreeSet<_>>().into_iter().collect();
    Ok(gens.iter().map(|g| monomials.iter().map(|m| g.terms().get(*m).copied().unwrap_or(0)).collect()).collect())
}

/// Dimension of the `F_p`-span of homogeneous quadratics.
pub fn quadratic_span_dimension(gens: &[FpMultiPoly], p: u64) -> Result<usize> {
    let field = PrimeField::new(p)?;
    let refs: Vec<&FpMultiPoly> = gens.iter().collect();
    let mut rows = coordinates(field, &refs)?;
    Ok(row_reduce(field, &mut rows))
}

/// Whether two sets of homogeneous quadratics span the same subspace over `F_p`.
/// For ideals generated in degree 2 this decides equality of the ideals.
pub fn quadratic_span_equal(gens1: &[FpMultiPoly], gens2: &[FpMultiPoly], p: u64) -> Result<bool> {
    let field = PrimeField::new(p)?;
    let rank = |gens: Vec<&FpMultiPoly>| -> Result<usize> {
        let mut rows = coordinates(field, &gens)?;
        Ok(row_reduce(field, &mut rows))
    };
    let r1 = rank(gens1.iter().collect())?;
    let r2 = rank(gens2.iter().collect())?;
    let both = rank(gens1.iter().chain(gens2).collect())?;
    Ok(r1 == both && r2 == both)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(field: PrimeField, terms: &[(Vec<u32>, i128)]) -> FpMultiPoly {
        FpMultiPoly::from_terms(field, 3, terms).unwrap()
    }

    #[test]
    fn scalar_multiples_agree() {
        let f = PrimeField::new(5).unwrap();
        let a = q(f, &[(vec![2, 0, 0], 1)]);
        let b = q(f, &[(vec![2, 0, 0], 2)]);
        assert!(quadratic_span_equal(&[a], &[b], 5).unwrap());
    }

    #[test]
    fn different_monomials_differ() {
        let f = PrimeField::new(5).unwrap();
        let a = q(f, &[(vec![1, 1, 0], 1)]);
        let b = q(f, &[(vec![1, 0, 1], 1)]);
        assert!(!quadratic_span_equal(std::slice::from_ref(&a), std::slice::from_ref(&b), 5).unwrap());
        assert_eq!(quadratic_span_dimension(&[a.clone(), b.clone(), a.add(&b)], 5).unwrap(), 2);
    }

    #[test]
    fn non_quadratics_rejected() {
        let f = PrimeField::new(5).unwrap();
        let lin = q(f, &[(vec![1, 0, 0], 1)]);
        assert!(quadratic_span_equal(&[lin], &[], 5).is_err());
        let wrong_field = FpMultiPoly::from_terms(PrimeField::new(7).unwrap(), 3, &[(vec![2, 0, 0], 1)]).unwrap();
        assert!(quadratic_span_dimension(&[wrong_field], 5).is_err());
    }
}
