use super::{rat, Monomial, Polynomial};
use crate::error::{Error, Result};

/// Checks the parameter range shared by every construction: `n >= 2`, `a >= 3`.
pub fn check_params(n: u32, a: u32) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidParameters(format!(
            "n = {n}: dimension must be at least 2"
        )));
    }
    if a < 3 {
        return Err(Error::InvalidParameters(format!(
            "a = {a}: degree must be at least 3"
        )));
    }
    Ok(())
}

/// `x_1^a + ... + x_{n+2}^a`.
pub fn fermat_potential(n: u32, a: u32) -> Result<Polynomial> {
    check_params(n, a)?;
    let m = (n + 2) as usize;
    Ok(Polynomial::from_terms(
        m,
        (0..m).map(|i| (Monomial::var(m, i).pow(a), rat(1))),
    ))
}

/// The Fermat potential minus the product of all variables.
pub fn deformed_potential(n: u32, a: u32) -> Result<Polynomial> {
    let mut w = fermat_potential(n, a)?;
    let m = w.nvars();
    w.add_term(Monomial::diagonal(m, 1), rat(-1));
    Ok(w)
}

/// All first partial derivatives.
pub fn partials(f: &Polynomial) -> Vec<Polynomial> {
    (0..f.nvars()).map(|i| f.derivative(i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Coeff, MonomialOrder};
    use num_traits::Zero;

    #[test]
    fn fermat_instances() {
        let w = fermat_potential(2, 6).unwrap();
        assert_eq!(w.to_string(), "x1^6 + x2^6 + x3^6 + x4^6");
        assert_eq!(
            fermat_potential(2, 3).unwrap().to_string(),
            "x1^3 + x2^3 + x3^3 + x4^3"
        );
        let w = fermat_potential(3, 8).unwrap();
        assert_eq!(w.nvars(), 5);
        assert_eq!(w.len(), 5);
        assert_eq!(w.total_degree(), Some(8));
    }

    #[test]
    fn parameter_guards() {
        assert!(fermat_potential(1, 6).is_err());
        assert!(fermat_potential(2, 2).is_err());
        assert!(deformed_potential(1, 8).is_err());
    }

    #[test]
    fn deformed_instance_and_partials() {
        let w = deformed_potential(2, 6).unwrap();
        assert_eq!(w.to_string(), "x1^6 + x2^6 + x3^6 + x4^6 - x1*x2*x3*x4");
        assert!(w.eval(&vec![Coeff::zero(); 4]).is_zero());
        let d = partials(&w);
        assert_eq!(d[0].to_string(), "6*x1^5 - x2*x3*x4");
        for (i, p) in d.iter().enumerate() {
            let mut expected = Polynomial::term(rat(6), Monomial::var(4, i).pow(5));
            let mut e = vec![1u32; 4];
            e[i] = 0;
            expected.add_term(Monomial::from_exponents(e), rat(-1));
            assert_eq!(p, &expected);
        }
        let c = partials(&Polynomial::one(4));
        assert!(c.iter().all(Polynomial::is_zero));
        let _ = MonomialOrder::default();
    }
}
