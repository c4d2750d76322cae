//! Affine lines of the plane GF(q)² grouped into their q+1 parallel classes.
//!
//! Class `m < q` holds the lines `y = m·x + c`; class `q` holds the vertical
//! lines `x = c`. Within a class, lines are ordered by offset index and the
//! points of a line by their free coordinate.

use crate::error::{Error, Result};
use crate::gf_field::{Field, FieldElement};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlanePoint {
    pub x: FieldElement,
    pub y: FieldElement,
}

impl PlanePoint {
    /// Row-major index `x·q + y`.
    pub fn index(self, q: u32) -> usize {
        (self.x.index() * q + self.y.index()) as usize
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineLine {
    order: u32,
    pub class_id: usize,
    pub offset: FieldElement,
    pub points: Vec<PlanePoint>,
}

impl AffineLine {
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_vertical(&self) -> bool {
        self.class_id == self.order as usize
    }

    /// Row-major point indices, in the line's point order.
    pub fn point_indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.points.iter().map(|p| p.index(self.order))
    }

    pub fn contains(&self, pt: PlanePoint) -> bool {
        self.points.contains(&pt)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParallelClass {
    pub class_id: usize,
    pub lines: Vec<AffineLine>,
}

/// Line of class `class_id` through offset `offset`.
pub fn line(f: &Field, class_id: usize, offset: FieldElement) -> AffineLine {
    let q = f.order();
    assert!(class_id <= q as usize, "class {class_id} out of range");
    let points = if class_id == q as usize {
        f.elements().map(|y| PlanePoint { x: offset, y }).collect()
    } else {
        let slope = f.element(class_id as u32).expect("slope in range");
        f.elements()
            .map(|x| PlanePoint {
                x,
                y: f.add(f.mul(slope, x), offset),
            })
            .collect()
    };
    AffineLine {
        order: q,
        class_id,
        offset,
        points,
    }
}

/// All q+1 parallel classes: slopes `0..q` first, then the vertical class.
pub fn parallel_classes(f: &Field) -> Vec<ParallelClass> {
    (0..=f.order() as usize)
        .map(|class_id| ParallelClass {
            class_id,
            lines: f.elements().map(|c| line(f, class_id, c)).collect(),
        })
        .collect()
}

/// Common points of two lines, in the order they appear on `a`.
pub fn line_intersect(a: &AffineLine, b: &AffineLine) -> Result<Vec<PlanePoint>> {
    if a.order != b.order {
        return Err(Error::MixedFields(a.order, b.order));
    }
    Ok(a.points
        .iter()
        .copied()
        .filter(|p| b.contains(*p))
        .collect())
}
