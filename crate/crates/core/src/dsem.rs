//! Topological semantics: `◇` as the derived set (d) or as closure (C).

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::check::{self, Countermodel, Validity, DEFAULT_BIT_BUDGET};
use crate::{Error, Formula, Frame, PointSet, Result, TopSpace, Valuation};

/// Which operator interprets `◇`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Semantics {
    /// `◇` is the derived set `de`.
    D,
    /// `◇` is the closure `cl`.
    C,
}

impl Semantics {
    /// The neighbour table the validity engine reads `◇` through.
    pub fn neighbours(self, space: &TopSpace) -> Vec<PointSet> {
        match self {
            Semantics::D => space.punctured_nbhds(),
            Semantics::C => space.min_nbhds().to_vec(),
        }
    }
}

impl fmt::Display for Semantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Semantics::D => "d",
            Semantics::C => "c",
        })
    }
}

/// A space with a valuation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopoModel {
    space: TopSpace,
    val: Valuation,
}

impl TopoModel {
    pub fn new(space: TopSpace, val: Valuation) -> Result<TopoModel> {
        val.check_carrier(space.len())?;
        Ok(TopoModel { space, val })
    }

    pub fn space(&self) -> &TopSpace {
        &self.space
    }

    pub fn valuation(&self) -> &Valuation {
        &self.val
    }

    pub fn eval(&self, f: &Formula, sem: Semantics) -> Result<PointSet> {
        let space = &self.space;
        let all = space.points();
        let go = |g: &Formula| self.eval(g, sem);
        Ok(match f {
            Formula::Var(v) => self.val.get(v)?,
            Formula::Top => all,
            Formula::Bot => PointSet::EMPTY,
            Formula::Not(a) => all - go(a)?,
            Formula::And(a, b) => go(a)? & go(b)?,
            Formula::Or(a, b) => go(a)? | go(b)?,
            Formula::Imp(a, b) => (all - go(a)?) | go(b)?,
            Formula::Dia(a) => match sem {
                Semantics::D => space.derived(go(a)?),
                Semantics::C => space.closure(go(a)?),
            },
            Formula::Box(a) => {
                let dual = all - go(a)?;
                all - match sem {
                    Semantics::D => space.derived(dual),
                    Semantics::C => space.closure(dual),
                }
            }
        })
    }

    /// `M_d(f)`.
    pub fn eval_d(&self, f: &Formula) -> Result<PointSet> {
        self.eval(f, Semantics::D)
    }

    /// `M_C(f)`.
    pub fn eval_c(&self, f: &Formula) -> Result<PointSet> {
        self.eval(f, Semantics::C)
    }
}

impl TopSpace {
    pub fn validity(&self, f: &Formula, sem: Semantics) -> Result<Validity> {
        self.validity_with_budget(f, sem, DEFAULT_BIT_BUDGET)
    }

    /// Exhaustive over all valuations of `vars(f)`; subject to the same
    /// bit budget as frame validity.
    pub fn validity_with_budget(&self, f: &Formula, sem: Semantics, budget: usize) -> Result<Validity> {
        check::validity(&sem.neighbours(self), f, budget)
    }

    pub fn d_valid(&self, f: &Formula) -> Result<bool> {
        Ok(self.validity(f, Semantics::D)?.is_valid())
    }

    pub fn c_valid(&self, f: &Formula) -> Result<bool> {
        Ok(self.validity(f, Semantics::C)?.is_valid())
    }

    /// Every point `x` has an open neighbourhood `O` with `O − {x}`
    /// nonempty and open inside any given neighbourhood. In a finite space
    /// the only candidate inside `U_x` is `U_x` itself.
    pub fn has_punctured_open_refinements(&self) -> bool {
        (0..self.len()).all(|x| {
            let p = self.min_nbhd(x).without(x);
            !p.is_empty() && self.is_open(p)
        })
    }

    /// For every open `O` and every `S`, `O ⊆ cl S` implies `O ⊆ de S`.
    pub fn open_dense_parts_are_derived(&self) -> bool {
        let opens = self.opens();
        self.points().subsets().all(|s| {
            let (cl, de) = (self.closure(s), self.derived(s));
            opens.iter().all(|&o| !o.is_subset(cl) || o.is_subset(de))
        })
    }

    /// `int cl S = int de S` for every `S`.
    pub fn int_closure_eq_int_derived(&self) -> bool {
        self.points()
            .subsets()
            .all(|s| self.interior(self.closure(s)) == self.interior(self.derived(s)))
    }
}

/// Why a map from a space to a frame is not a d-morphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DMorphismViolation {
    /// The preimage of the basic open `R*(w)` is not open.
    Discontinuous { w: usize },
    /// The image of `U_x` is not an up-set.
    NotOpen { x: usize },
    /// `w` is reflexive and `f⁻¹{w}` has a point isolated in it.
    FibreNotCrowded { w: usize },
    /// `w` is irreflexive and `f⁻¹{w}` has a limit point of itself.
    FibreNotDiscrete { w: usize },
}

impl fmt::Display for DMorphismViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Discontinuous { w } => write!(f, "not continuous: preimage of R*({w}) is not open"),
            Self::NotOpen { x } => write!(f, "not open: image of U_{x} is not an up-set"),
            Self::FibreNotCrowded { w } => write!(f, "fibre over reflexive {w} is not crowded"),
            Self::FibreNotDiscrete { w } => write!(f, "fibre over irreflexive {w} is not discrete"),
        }
    }
}

/// Outcome of comparing d-validity in the space with validity in the
/// frame along a surjective d-morphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Transfer {
    Consistent { space_valid: bool, frame_valid: bool },
    /// The formula is d-valid in the space but fails in the frame. Only a
    /// bug can produce this.
    Violation { frame_countermodel: Countermodel },
}

impl Transfer {
    pub fn is_consistent(&self) -> bool {
        matches!(self, Transfer::Consistent { .. })
    }
}

/// A total map from the points of a space to the points of a transitive
/// frame.
#[derive(Debug, Clone, Copy)]
pub struct DMorphism<'a> {
    map: &'a [usize],
    space: &'a TopSpace,
    frame: &'a Frame,
}

impl<'a> DMorphism<'a> {
    pub fn new(map: &'a [usize], space: &'a TopSpace, frame: &'a Frame) -> Result<Self> {
        if !frame.is_transitive() {
            return Err(Error::NotTransitive);
        }
        if map.len() != space.len() {
            return Err(Error::InvalidMap(format!(
                "map has {} entries for {} points",
                map.len(),
                space.len()
            )));
        }
        if let Some(&point) = map.iter().find(|&&w| w >= frame.len()) {
            return Err(Error::PointOutOfRange { point, len: frame.len() });
        }
        Ok(DMorphism { map, space, frame })
    }

    pub fn map(&self) -> &[usize] {
        self.map
    }

    pub fn preimage(&self, s: PointSet) -> PointSet {
        (0..self.map.len()).filter(|&x| s.contains(self.map[x])).collect()
    }

    pub fn image(&self, s: PointSet) -> PointSet {
        s.iter().map(|x| self.map[x]).collect()
    }

    pub fn fibre(&self, w: usize) -> PointSet {
        self.preimage(PointSet::singleton(w))
    }

    pub fn is_surjective(&self) -> bool {
        self.image(self.space.points()) == self.frame.points()
    }

    /// Continuity and openness are checked on bases: `R*(w)` in the frame,
    /// `U_x` in the space. Images commute with unions, so that suffices.
    pub fn check(&self) -> core::result::Result<(), DMorphismViolation> {
        let (space, frame) = (self.space, self.frame);
        for w in 0..frame.len() {
            if !space.is_open(self.preimage(frame.reflexive_successors(w))) {
                return Err(DMorphismViolation::Discontinuous { w });
            }
        }
        for x in 0..space.len() {
            let img = self.image(space.min_nbhd(x));
            if img.iter().any(|v| !frame.succ(v).is_subset(img)) {
                return Err(DMorphismViolation::NotOpen { x });
            }
        }
        for w in 0..frame.len() {
            let fibre = self.fibre(w);
            let de = space.derived(fibre);
            if frame.is_reflexive_at(w) {
                if !fibre.is_subset(de) {
                    return Err(DMorphismViolation::FibreNotCrowded { w });
                }
            } else if fibre.intersects(de) {
                return Err(DMorphismViolation::FibreNotDiscrete { w });
            }
        }
        Ok(())
    }

    pub fn is_d_morphism(&self) -> bool {
        self.check().is_ok()
    }

    /// d-validity of `f` in the space must imply validity in the frame.
    /// Requires a surjective d-morphism.
    pub fn validity_transfer(&self, f: &Formula) -> Result<Transfer> {
        if let Err(v) = self.check() {
            return Err(Error::Precondition(format!("not a d-morphism: {v}")));
        }
        if !self.is_surjective() {
            return Err(Error::Precondition("map is not onto the frame".into()));
        }
        let space_valid = self.space.d_valid(f)?;
        let frame_validity = self.frame.validity(f)?;
        Ok(match frame_validity {
            Validity::Invalid(c) if space_valid => Transfer::Violation { frame_countermodel: c },
            v => Transfer::Consistent {
                space_valid,
                frame_valid: v.is_valid(),
            },
        })
    }

    /// Truth is preserved pointwise: under the pulled-back valuation the
    /// d-truth set of `f` is the preimage of its truth set in the frame.
    pub fn preserves_truth(&self, val: &Valuation, f: &Formula) -> Result<bool> {
        let pulled = TopoModel::new(self.space.clone(), val.pull_back(self.map))?;
        Ok(pulled.eval_d(f)? == self.preimage(self.frame.eval(val, f)?))
    }
}
