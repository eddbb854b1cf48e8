//! The six benchmark functions `a` .. `f` in their two standard views:
//! scaled generator sections of one ratio variable, and divergences of the
//! two-point symmetric family.

use crate::distributions::binary_symmetric_pair;
use crate::divergences::{divergence, generator_of, MeasureId};

/// Column identifiers for the six functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Section {
    /// Square-root/arithmetic generator.
    A,
    /// A third of the square-root/harmonic generator.
    B,
    /// A quarter of the triangular-discrimination generator.
    C,
    /// Half the square-root/geometric generator.
    D,
    /// The Jensen-Shannon generator.
    E,
    /// The Hellinger generator.
    F,
}

impl Section {
    pub const ALL: [Section; 6] = [
        Section::A,
        Section::B,
        Section::C,
        Section::D,
        Section::E,
        Section::F,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Section::A => "a",
            Section::B => "b",
            Section::C => "c",
            Section::D => "d",
            Section::E => "e",
            Section::F => "f",
        }
    }

    fn parts(self) -> (f64, MeasureId) {
        match self {
            Section::A => (1.0, MeasureId::SA),
            Section::B => (1.0 / 3.0, MeasureId::SH),
            Section::C => (0.25, MeasureId::Triangular),
            Section::D => (0.5, MeasureId::SG),
            Section::E => (1.0, MeasureId::JensenShannonI),
            Section::F => (1.0, MeasureId::Hellinger),
        }
    }
}

/// Ratio abscissae of the generator-section table.
pub const TABLE1_X: [f64; 6] = [0.1, 10.0, 1000.0, 3000.0, 3800.0, 3900.0];

/// Mass parameters of the binary-family table.
pub const TABLE2_T: [f64; 6] = [0.0001, 0.001, 0.01, 0.1, 0.2, 0.4];

/// The scaled generator section of `col` at ratio `x`.
pub fn section_value(col: Section, x: f64) -> f64 {
    let (scale, id) = col.parts();
    scale * generator_of(id).expect("catalog generator").f(x)
}

/// The scaled divergence of `col` on the pair `P = (t, 1-t)`, `Q = (1-t, t)`.
pub fn binary_family_value(col: Section, t: f64) -> f64 {
    let (scale, id) = col.parts();
    let (p, q) = binary_symmetric_pair(t).expect("t in (0,1)");
    scale * divergence(id, &p, &q).expect("same length")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn section_spot_values() {
        assert!((section_value(Section::A, 10.0) - 1.6063).abs() < 1e-4);
        assert!((section_value(Section::E, 10.0) - 2.1368).abs() < 1e-4);
        assert!((section_value(Section::F, 10.0) - 2.3377).abs() < 1e-4);
    }

    #[test]
    fn binary_family_spot_values() {
        assert!((binary_family_value(Section::C, 0.4) - 0.02).abs() < 1e-10);
        assert!((binary_family_value(Section::D, 0.0001) - 0.6970).abs() < 1e-4);
        // every column is zero at the symmetry point
        for col in Section::ALL {
            assert!(
                binary_family_value(col, 0.5).abs() < 1e-14,
                "{}",
                col.label()
            );
        }
    }

    #[test]
    fn sections_and_family_agree_at_n_two() {
        // summing the generator section over the two ratio values of the
        // binary pair reproduces the family value
        for col in Section::ALL {
            for t in [0.05, 0.2, 0.45] {
                let x1 = t / (1.0 - t);
                let x2 = (1.0 - t) / t;
                let (scale, id) = (col.parts().0, col.parts().1);
                let gen = generator_of(id).unwrap();
                let termwise = scale * ((1.0 - t) * gen.f(x1) + t * gen.f(x2));
                let family = binary_family_value(col, t);
                assert!(
                    (termwise - family).abs() <= 1e-12,
                    "{} t={t}: {termwise} vs {family}",
                    col.label()
                );
            }
        }
    }
}
