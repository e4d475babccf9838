use super::fan::SmallConeFan;
use super::walls::{Wall, WallSource};

/// Weyl chambers of the internal roots against the small cones of a fan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DolgachevReport {
    pub chambers: usize,
    pub small_cones: usize,
    pub internal_walls: Vec<Wall>,
    /// External walls inside each chamber, chambers in fan order.
    pub subdivisions: Vec<Vec<Wall>>,
}

impl DolgachevReport {
    /// Do the two decompositions coincide?
    pub fn coincide(&self) -> bool {
        self.chambers == self.small_cones
    }
}

/// Chambers are cut only by walls of roots `β ∈ Λ`; the fan also uses the
/// external walls.
pub fn dolgachev_comparison(fan: &SmallConeFan) -> DolgachevReport {
    let mut internal_walls = Vec::new();
    let mut subdivisions = vec![Vec::new()];
    for w in fan.walls() {
        match w.source {
            WallSource::InternalRoot => {
                internal_walls.push(w.clone());
                subdivisions.push(Vec::new());
            }
            WallSource::External => subdivisions.last_mut().expect("nonempty").push(w.clone()),
        }
    }
    DolgachevReport { chambers: subdivisions.len(), small_cones: fan.cone_count(), internal_walls, subdivisions }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cones::{small_cones_rank2, Region};
    use crate::lattice::Lattice;

    #[test]
    fn scaled_planes() {
        let report = |n| dolgachev_comparison(&small_cones_rank2(&Lattice::u_scaled(n).unwrap(), &Region::FullCone).unwrap());
        let r = report(1);
        assert_eq!((r.chambers, r.small_cones), (2, 2));
        assert!(r.coincide() && r.subdivisions.iter().all(Vec::is_empty));
        let r = report(2);
        assert_eq!((r.chambers, r.small_cones, r.subdivisions[0].len()), (1, 2, 1));
        let r = report(3);
        assert_eq!((r.chambers, r.small_cones, r.subdivisions[0].len()), (1, 4, 3));
    }
}
