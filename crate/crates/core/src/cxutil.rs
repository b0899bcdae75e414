//! Small complex-arithmetic helpers shared across modules.

use num_complex::Complex64;

/// Principal argument in (-pi, pi].
///
/// `Complex64::arg` returns values in [-pi, pi]; the convention here maps the
/// negative real axis to +pi so that classification is deterministic.
pub fn principal_arg(z: Complex64) -> f64 {
    let a = z.arg();
    if a == -std::f64::consts::PI {
        std::f64::consts::PI
    } else {
        a
    }
}

/// Principal fractional power z^(1/alpha) = exp((ln|z| + i arg z)/alpha).
pub fn fractional_root(z: Complex64, alpha: f64) -> Complex64 {
    if z == Complex64::new(0.0, 0.0) {
        return Complex64::new(0.0, 0.0);
    }
    let ln = Complex64::new(z.norm().ln(), principal_arg(z));
    (ln / alpha).exp()
}

/// Principal power z^p for real p.
pub fn principal_pow(z: Complex64, p: f64) -> Complex64 {
    if z == Complex64::new(0.0, 0.0) {
        return if p == 0.0 {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        };
    }
    let ln = Complex64::new(z.norm().ln(), principal_arg(z));
    (ln * p).exp()
}

/// Decay rate rho = Re(lambda^(1/alpha)) = |lambda|^(1/alpha) cos(arg(lambda)/alpha)
/// of exp(-lambda^(1/alpha) t). Positive exactly when lambda is in the open
/// unstable sector.
pub fn unstable_rate(lambda: Complex64, alpha: f64) -> f64 {
    fractional_root(lambda, alpha).re
}

/// JSON form of complex scalars: a bare number for reals, `[re, im]` otherwise.
pub mod cx_serde {
    use num_complex::Complex64;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Real(f64),
        Pair([f64; 2]),
    }

    impl From<Repr> for Complex64 {
        fn from(r: Repr) -> Self {
            match r {
                Repr::Real(x) => Complex64::new(x, 0.0),
                Repr::Pair([re, im]) => Complex64::new(re, im),
            }
        }
    }

    pub fn serialize<S: Serializer>(z: &Complex64, s: S) -> Result<S::Ok, S::Error> {
        [z.re, z.im].serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Complex64, D::Error> {
        Repr::deserialize(d).map(Complex64::from)
    }

    pub mod vec {
        use super::*;

        pub fn serialize<S: Serializer>(v: &[Complex64], s: S) -> Result<S::Ok, S::Error> {
            v.iter().map(|z| [z.re, z.im]).collect::<Vec<_>>().serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Complex64>, D::Error> {
            Ok(Vec::<Repr>::deserialize(d)?.into_iter().map(Complex64::from).collect())
        }
    }

    pub mod mat {
        use super::*;

        pub fn serialize<S: Serializer>(m: &[Vec<Complex64>], s: S) -> Result<S::Ok, S::Error> {
            m.iter()
                .map(|row| row.iter().map(|z| [z.re, z.im]).collect::<Vec<_>>())
                .collect::<Vec<_>>()
                .serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<Complex64>>, D::Error> {
            let rows = Vec::<Vec<Repr>>::deserialize(d)?;
            if rows.is_empty() {
                return Err(D::Error::custom("empty matrix"));
            }
            Ok(rows
                .into_iter()
                .map(|r| r.into_iter().map(Complex64::from).collect())
                .collect())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn negative_axis_maps_to_plus_pi() {
        assert_eq!(principal_arg(Complex64::new(-2.0, 0.0)), PI);
        assert_eq!(principal_arg(Complex64::new(-2.0, -0.0)), PI);
    }

    #[test]
    fn fractional_root_matches_real_powers() {
        let z = Complex64::new(3.0, 0.0);
        let r = fractional_root(z, 0.5);
        assert!((r.re - 9.0).abs() < 1e-12 && r.im.abs() < 1e-12);
    }

    #[test]
    fn unstable_rate_sign_tracks_sector() {
        // arg = pi/3, alpha = 0.8: arg/alpha = 5pi/12 < pi/2 -> positive rate
        let lam = Complex64::from_polar(2.0, PI / 3.0);
        assert!(unstable_rate(lam, 0.8) > 0.0);
        // alpha = 0.5: arg/alpha = 2pi/3 > pi/2 -> negative rate
        assert!(unstable_rate(lam, 0.5) < 0.0);
    }
}
