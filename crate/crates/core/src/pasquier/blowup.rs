//! Divisor bookkeeping on the blow-up `X~ = Bl_Z X`.
//!
//! `Pic(X~)` has basis `(pi^* H_Y, phi^* H_X)`, where `pi: X~ -> Y` is the
//! smooth contraction and `phi: X~ -> X` the blow-down with exceptional
//! divisor `E`. Two expressions for `-K_{X~}` must agree:
//!
//! * `pi^*(-K_Y) + (-K_pi) = c1(Y) pi^*H_Y - K_pi`,
//! * `phi^*(-K_X) - (codim Z - 1) E = r_X phi^*H_X - (codim Z - 1) E`.
//!
//! Solving gives the Fano index `r_X`. Writing `-K_pi = x phi^*H_X + y E`
//! gives `c1(F) = x` for the foliation `F`, since `phi` contracts `E`.

use crate::error::{Error, Result};

/// A divisor class `a pi^*H_Y + b phi^*H_X`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DivisorClass {
    pub pi_y: i64,
    pub phi_x: i64,
}

impl DivisorClass {
    pub const fn new(pi_y: i64, phi_x: i64) -> Self {
        DivisorClass { pi_y, phi_x }
    }

    fn scale(self, k: i64) -> Self {
        DivisorClass::new(self.pi_y * k, self.phi_x * k)
    }

    fn add(self, other: Self) -> Self {
        DivisorClass::new(self.pi_y + other.pi_y, self.phi_x + other.phi_x)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BlowupModel {
    pub c1_y: i64,
    pub codim_z: i64,
    /// The exceptional divisor `E`.
    pub exceptional: DivisorClass,
    /// The relative anticanonical class `-K_pi`.
    pub relative_anticanonical: DivisorClass,
}

impl BlowupModel {
    /// Horospherical case: `X~ = P(E_Y + O_Y(1))` with tautological class
    /// `phi^*H_X`, and `E = phi^*H_X - pi^*H_Y`.
    pub fn horospherical(c1_y: i64, codim_z: i64, rank_ey: i64, c1_ey: i64) -> Self {
        BlowupModel {
            c1_y,
            codim_z,
            exceptional: DivisorClass::new(-1, 1),
            relative_anticanonical: DivisorClass::new(-(c1_ey + 1), rank_ey + 1),
        }
    }

    /// `Bl_Z Pas_F4 = Gr(M, 2)`: `E = phi^*H - pi^*H_Y`, `-K_pi = 6E`.
    pub fn pas_f4(c1_y: i64, codim_z: i64) -> Self {
        let exceptional = DivisorClass::new(-1, 1);
        BlowupModel {
            c1_y,
            codim_z,
            exceptional,
            relative_anticanonical: exceptional.scale(6),
        }
    }

    /// `Bl_Z Pas_A1xG2 = P(M + M)`: `E = 2 phi^*H - pi^*H_Y`, `-K_pi = 2E`.
    pub fn pas_a1g2(c1_y: i64, codim_z: i64) -> Self {
        let exceptional = DivisorClass::new(-1, 2);
        BlowupModel {
            c1_y,
            codim_z,
            exceptional,
            relative_anticanonical: exceptional.scale(2),
        }
    }

    /// `-K_{X~}` computed through `pi`.
    pub fn anticanonical(&self) -> DivisorClass {
        DivisorClass::new(self.c1_y, 0).add(self.relative_anticanonical)
    }

    /// `r_X` with `-K_X = r_X H_X`.
    pub fn fano_index(&self) -> Result<i64> {
        // -K_{X~} + (codim - 1) E = r_X phi^*H_X
        let rhs = self
            .anticanonical()
            .add(self.exceptional.scale(self.codim_z - 1));
        if rhs.pi_y != 0 {
            return Err(Error::Inconsistent(format!(
                "-K of the blow-up leaves {} pi^*H_Y after removing the exceptional part",
                rhs.pi_y
            )));
        }
        Ok(rhs.phi_x)
    }

    /// `c1(F)` on `X` for the foliation induced by `pi`.
    pub fn foliation_c1(&self) -> Result<i64> {
        let e = self.exceptional;
        let k = self.relative_anticanonical;
        if e.pi_y == 0 || k.pi_y % e.pi_y != 0 {
            return Err(Error::Inconsistent(
                "-K_pi is not of the form x phi^*H_X + y E".into(),
            ));
        }
        let y = k.pi_y / e.pi_y;
        Ok(k.phi_x - y * e.phi_x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exceptional_cases() {
        let f4 = BlowupModel::pas_f4(8, 3);
        assert_eq!(f4.relative_anticanonical, DivisorClass::new(-6, 6));
        assert_eq!(f4.fano_index(), Ok(8));
        assert_eq!(f4.foliation_c1(), Ok(0));

        let g2 = BlowupModel::pas_a1g2(3, 2);
        assert_eq!(g2.relative_anticanonical, DivisorClass::new(-2, 4));
        assert_eq!(g2.fano_index(), Ok(6));
        assert_eq!(g2.foliation_c1(), Ok(0));
    }

    #[test]
    fn horospherical_closed_forms() {
        // (B_n, w_{n-1}, w_n): c1(Y) = n+1, codim Z = n, E_Y of rank 2, c1 = 1.
        for n in 3..20 {
            let m = BlowupModel::horospherical(n + 1, n, 2, 1);
            assert_eq!(m.fano_index(), Ok(n + 2));
            assert_eq!(m.foliation_c1(), Ok(1));
        }
    }

    #[test]
    fn wrong_codimension_is_inconsistent() {
        assert!(matches!(
            BlowupModel::pas_f4(8, 2).fano_index(),
            Err(Error::Inconsistent(_))
        ));
    }
}
