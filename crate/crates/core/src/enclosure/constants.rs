//! Named constant enclosures.

use super::{zeta_half, Enclosure, Result};

/// Euler's constant, shipped rather than computed; it only enters the
/// remainder of the `sum Λ(k)/k` estimate.
pub const EULER_GAMMA_LO: f64 = 0.5772156649;
pub const EULER_GAMMA_HI: f64 = 0.5772156650;

/// Independent cross-check interval for ζ(1/2).
pub const ZETA_HALF_CHECK: (f64, f64) = (-1.4603545089, -1.4603545087);

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConstantTable {
    pub zeta_half: Enclosure,
    pub euler_gamma: Enclosure,
    pub pi: Enclosure,
    pub pi_squared: Enclosure,
}

impl ConstantTable {
    pub fn new() -> Self {
        // f64 PI is the nearest double below π.
        let pi = Enclosure::new(std::f64::consts::PI, std::f64::consts::PI.next_up())
            .expect("ordered");
        let euler_gamma =
            Enclosure::new(EULER_GAMMA_LO.next_down(), EULER_GAMMA_HI.next_up()).expect("ordered");
        let zeta_half = zeta_half();
        let check = Enclosure::new(ZETA_HALF_CHECK.0.next_down(), ZETA_HALF_CHECK.1.next_up())
            .expect("ordered");
        assert!(
            zeta_half.intersects(&check),
            "computed zeta(1/2) {zeta_half} disagrees with the reference enclosure"
        );
        ConstantTable {
            zeta_half,
            euler_gamma,
            pi,
            pi_squared: pi.square().expect("finite"),
        }
    }

    /// `log(num/den)` for positive integers.
    pub fn log_ratio(&self, num: u64, den: u64) -> Result<Enclosure> {
        Enclosure::ratio(num as i128, den as i128)?.ln()
    }

    /// `6/π²`, the density of squarefree integers.
    pub fn six_over_pi_squared(&self) -> Enclosure {
        Enclosure::point(6.0).div(self.pi_squared).expect("π² > 0")
    }
}

impl Default for ConstantTable {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_invariants() {
        let c = ConstantTable::new();
        assert!(c.zeta_half.lo() >= -1.47 && c.zeta_half.hi() <= -1.46);
        assert!(c.euler_gamma.lo() >= 0.577 && c.euler_gamma.hi() <= 0.578);
        for e in [c.zeta_half, c.euler_gamma, c.pi_squared] {
            assert!(e.width() <= 1e-9, "{e}");
        }
        let pi2 = 9.869604401089358;
        assert!(c.pi_squared.contains(pi2));
        assert!(c.log_ratio(30, 1).unwrap().contains(30f64.ln()));
    }
}
