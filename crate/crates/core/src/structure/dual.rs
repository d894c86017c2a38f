use super::GroupDescriptor;

/// Pontryagin dual, computed structurally.
pub fn dual(d: &GroupDescriptor) -> GroupDescriptor {
    use GroupDescriptor::*;
    let each = |parts: &[GroupDescriptor]| parts.iter().map(dual).collect();
    match d {
        Int => Torus,
        Torus => Int,
        Reals => Reals,
        RPower { n } => RPower { n: *n },
        Cyclic { m } => Cyclic { m: *m },
        Quasicyclic { p } => Padic { p: *p },
        Padic { p } => Quasicyclic { p: *p },
        FiniteSum { parts } => FiniteSum { parts: each(parts) },
        SumOmega { parts } => ProdOmega { parts: each(parts) },
        ProdOmega { parts } => SumOmega { parts: each(parts) },
    }
}
