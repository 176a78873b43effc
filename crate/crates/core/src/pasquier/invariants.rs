use num_rational::Ratio;
use num_traits::One;

use super::blowup::BlowupModel;
use super::triple::{Family, TripleSpec};
use crate::error::{Error, Result};
use crate::flagvar::{self, MaximalFlags, ParabolicMarking};
use crate::rootsys::{RootSystem, Weight};
use crate::scalar::{self, Scalar};

/// `-K_{Pas_F4} = 8 H`.
pub const PAS_F4_INDEX: u64 = 8;
/// `-K_{Pas_A1xG2} = 6 H`.
pub const PAS_A1G2_INDEX: u64 = 6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarietyInvariants<T: Scalar> {
    pub dim_y: u64,
    pub c1_y: u64,
    pub dim_z: u64,
    /// Full anticanonical weight of `Z`; `Z` has Picard rank 2 for
    /// `PasA1G2`.
    pub c1_z: Weight<T>,
    pub dim_x: u64,
    /// Fano index of `X`.
    pub r_x: u64,
    pub codim_z: u64,
}

impl<T: Scalar> VarietyInvariants<T> {
    /// The Fano index of `Z` when `Z` has Picard rank one.
    pub fn c1_z_index(&self) -> Option<u64> {
        match self.c1_z.support()[..] {
            [node] => scalar::ratio_to_i64(&self.c1_z.coeffs()[node]).map(|v| v as u64),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FoliationInvariants {
    pub rank_f: u64,
    /// Coefficient of `c1(F)` on `H_X`.
    pub c1_f: u64,
    /// `rank E_Y`; only the horospherical families carry `E_Y`.
    pub rank_ey: Option<u64>,
    pub c1_ey: Option<i64>,
}

/// Root-system data for one Dynkin type, shared by every triple of that
/// type.
pub struct TypeData {
    pub rs: RootSystem,
    pub maximal: MaximalFlags,
}

impl TypeData {
    pub fn new(rs: RootSystem) -> Self {
        let maximal = MaximalFlags::new(&rs);
        TypeData { rs, maximal }
    }

    pub fn for_triple(triple: &TripleSpec) -> Result<Self> {
        Ok(Self::new(RootSystem::new(triple.dynkin())?))
    }

    fn check(&self, triple: &TripleSpec) -> Result<()> {
        if self.rs.dynkin() != &triple.dynkin() {
            return Err(Error::InvalidTriple(format!(
                "{triple} lives on {}, not {}",
                triple.dynkin(),
                self.rs.dynkin()
            )));
        }
        Ok(())
    }

    fn dimension(&self, marking: &ParabolicMarking) -> Result<u64> {
        marking.check(&self.rs)?;
        match *marking.nodes() {
            [a] => Ok(self.maximal.dimension(a)),
            [a, b] => Ok(self.maximal.pair_dimension(a, b)),
            _ => flagvar::flag_dimension(&self.rs, marking),
        }
    }

    fn anticanonical<T: Scalar>(&self, marking: &ParabolicMarking) -> Result<Weight<T>> {
        if marking.is_maximal() {
            marking.check(&self.rs)?;
            self.maximal.anticanonical(marking.nodes()[0])
        } else {
            flagvar::anticanonical_weight(&self.rs, marking)
        }
    }

    pub fn variety_invariants<T: Scalar>(&self, triple: &TripleSpec) -> Result<VarietyInvariants<T>> {
        self.check(triple)?;
        let my = triple.marking_y();
        let mz = triple.marking_z();
        let dim_y = self.dimension(&my)?;
        let c1_y = self.maximal.fano_index(my.nodes()[0]);
        let dim_z = self.dimension(&mz)?;
        let c1_z = self.anticanonical::<T>(&mz)?;
        let dim_x = self.dimension(&my.union(&mz))? + 1;
        let r_x = match triple.family() {
            Family::PasF4 => PAS_F4_INDEX,
            Family::PasA1G2 => PAS_A1G2_INDEX,
            _ => {
                let r = 2 * dim_x as i64 - dim_y as i64 - dim_z as i64;
                u64::try_from(r).map_err(|_| {
                    Error::Inconsistent(format!("{triple}: nonpositive index {r}"))
                })?
            }
        };
        Ok(VarietyInvariants {
            dim_y,
            c1_y,
            dim_z,
            c1_z,
            dim_x,
            r_x,
            codim_z: dim_x - dim_z,
        })
    }
}

pub fn variety_invariants<T: Scalar>(triple: &TripleSpec) -> Result<VarietyInvariants<T>> {
    TypeData::for_triple(triple)?.variety_invariants(triple)
}

/// Foliation invariants from already computed variety invariants.
pub fn foliation_from_variety<T: Scalar>(
    triple: &TripleSpec,
    variety: &VarietyInvariants<T>,
) -> FoliationInvariants {
    // pi has relative dimension dim X - dim Y in every case.
    let rank = variety.dim_x - variety.dim_y;
    if triple.is_horospherical() {
        let c1_ey = variety.c1_y as i64 - variety.codim_z as i64;
        FoliationInvariants {
            rank_f: rank,
            c1_f: (rank as i64 - c1_ey) as u64,
            rank_ey: Some(rank),
            c1_ey: Some(c1_ey),
        }
    } else {
        FoliationInvariants {
            rank_f: rank,
            c1_f: 0,
            rank_ey: None,
            c1_ey: None,
        }
    }
}

pub fn foliation_invariants(triple: &TripleSpec) -> Result<FoliationInvariants> {
    let variety = variety_invariants::<i64>(triple)?;
    Ok(foliation_from_variety(triple, &variety))
}

/// The divisor model of the blow-up along the closed orbit, built from the
/// computed invariants. Its derived index and foliation class must match
/// the ones above.
pub fn blowup_model<T: Scalar>(
    triple: &TripleSpec,
    variety: &VarietyInvariants<T>,
    foliation: &FoliationInvariants,
) -> BlowupModel {
    let c1_y = variety.c1_y as i64;
    let codim = variety.codim_z as i64;
    match (triple.family(), foliation.rank_ey, foliation.c1_ey) {
        (Family::PasF4, ..) => BlowupModel::pas_f4(c1_y, codim),
        (Family::PasA1G2, ..) => BlowupModel::pas_a1g2(c1_y, codim),
        (_, Some(rank), Some(c1)) => BlowupModel::horospherical(c1_y, codim, rank as i64, c1),
        _ => unreachable!("horospherical triples carry E_Y"),
    }
}

fn marking_weight<T: Scalar>(rank: usize, marking: &ParabolicMarking) -> Weight<T> {
    let mut coeffs = vec![Ratio::from_integer(T::zero()); rank];
    for &i in marking.nodes() {
        coeffs[i] = Ratio::one();
    }
    Weight::new(coeffs)
}

/// Dimension of the linear space spanned by the drum embedding of `X`:
/// `dim V_Y + dim V_Z` for the horospherical families, and
/// `dim (C^2 (x) V_7) = 14` for `PasA1G2`, which sits in
/// `P(im O + im O)`.
pub fn ambient_dimension<T: Scalar>(triple: &TripleSpec) -> Result<T> {
    let rs = RootSystem::new(triple.dynkin())?;
    let dim = |m: &ParabolicMarking| rs.weyl_dim(&marking_weight::<T>(rs.rank(), m));
    match triple.family() {
        Family::PasF4 => Err(Error::NotApplicable(triple.id())),
        Family::PasA1G2 => dim(&triple.marking_z()),
        _ => {
            let y = dim(&triple.marking_y())?;
            let z = dim(&triple.marking_z())?;
            y.checked_add(&z).ok_or(Error::Overflow)
        }
    }
}
