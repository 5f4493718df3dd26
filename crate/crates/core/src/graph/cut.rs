use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use serde::{Serialize, Serializer};

/// A two-sided vertex assignment; `true` is side 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cut {
    sides: Vec<bool>,
}

impl Cut {
    /// All vertices on side 0.
    pub fn new(n: usize) -> Self {
        Self {
            sides: vec![false; n],
        }
    }

    pub fn from_sides(sides: Vec<bool>) -> Self {
        Self { sides }
    }

    pub fn len(&self) -> usize {
        self.sides.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sides.is_empty()
    }

    pub fn side(&self, v: usize) -> bool {
        self.sides[v]
    }

    pub fn set(&mut self, v: usize, side: bool) {
        self.sides[v] = side;
    }

    pub fn flip(&mut self, v: usize) {
        self.sides[v] = !self.sides[v];
    }

    pub fn complement(&self) -> Self {
        Self {
            sides: self.sides.iter().map(|s| !s).collect(),
        }
    }

    pub fn sides(&self) -> &[bool] {
        &self.sides
    }

    pub fn into_sides(self) -> Vec<bool> {
        self.sides
    }

    /// The assignment as a string of `0`/`1`.
    pub fn to_bit_string(&self) -> String {
        self.sides.iter().map(|&s| if s { '1' } else { '0' }).collect()
    }
}

impl Serialize for Cut {
    fn serialize<S: Serializer>(&self, s: S) -> core::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_bit_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Multigraph;
    use proptest::prelude::*;

    fn triangle() -> Multigraph {
        Multigraph::from_edges(3, [(0, 1, 1), (1, 2, 1), (0, 2, 1)]).unwrap()
    }

    #[test]
    fn values() {
        let g = triangle();
        let c = Cut::from_sides(vec![true, false, false]);
        assert_eq!(g.cut_value(&c).unwrap(), 2);
        assert_eq!(g.cut_value(&Cut::new(3)).unwrap(), 0);
        let h = Multigraph::from_edges(2, [(0, 1, 3)]).unwrap();
        assert_eq!(h.cut_value(&Cut::from_sides(vec![false, true])).unwrap(), 3);
        assert!(g.cut_value(&Cut::new(2)).is_err());
        assert_eq!(c.to_bit_string(), "100");
    }

    proptest! {
        #[test]
        fn complement_and_range(
            raw in proptest::collection::vec((0usize..8, 0usize..8, 1u64..4), 0..30),
            bits in proptest::collection::vec(any::<bool>(), 8),
        ) {
            let g = Multigraph::from_edges(8, raw).unwrap();
            let c = Cut::from_sides(bits);
            let v = g.cut_value(&c).unwrap();
            prop_assert_eq!(v, g.cut_value(&c.complement()).unwrap());
            prop_assert!(v <= g.total_multiplicity() - g.self_loop_total());
            let vol: u64 = g.degrees().iter().sum();
            prop_assert_eq!(vol, 2 * g.total_multiplicity());
        }
    }
}
