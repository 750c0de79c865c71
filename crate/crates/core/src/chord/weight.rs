//! The connectivity weight: 1 on diagrams whose total smoothing is a
//! single circle, 0 otherwise.

use super::ChordDiagram;

/// Smooth every chord (the result is independent of the order) and report
/// whether exactly one circle remains. Any bare circle in the input forces
/// the value 0.
pub fn weight(d: &ChordDiagram) -> u32 {
    let mut work = d.clone();
    while let Some(&(p, q)) = work.chords().first() {
        work = work.smooth_chord(p, q).expect("chord exists");
    }
    u32::from(work.circle_count() == 1)
}

#[cfg(test)]
mod tests {
    use super::super::{g_chord, ChordDiagram};
    use super::*;

    #[test]
    fn connected_family_has_weight_one() {
        for k in 1..=4 {
            assert_eq!(weight(&g_chord(0, k)), 1, "g(0,{k})");
        }
    }

    #[test]
    fn curl_smoothing_splits() {
        assert_eq!(weight(&g_chord(1, 1)), 0);
    }

    #[test]
    fn isolated_chord_forces_zero() {
        // Any diagram with an isolated chord splits a circle off.
        for k in 1..=3 {
            for l in 1..=k {
                assert_eq!(weight(&g_chord(l, k)), 0, "g({l},{k})");
            }
        }
    }

    #[test]
    fn bare_circles_force_zero() {
        assert_eq!(weight(&g_chord(0, 2).with_free(1)), 0);
        assert_eq!(weight(&ChordDiagram::bare(1)), 1);
        assert_eq!(weight(&ChordDiagram::bare(2)), 0);
    }

    #[test]
    fn weight_is_relabelling_invariant() {
        use super::super::enumerate_diagrams;
        for d in enumerate_diagrams(3, 2).unwrap() {
            assert_eq!(weight(&d), weight(&d.canonical_form()));
        }
    }
}
