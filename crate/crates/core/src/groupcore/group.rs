use std::collections::{BTreeSet, HashMap, VecDeque};

use super::schema::{Element, Schema, SchemaId};
use super::GroupError;

/// A schema together with its enumerated elements and full Cayley table.
///
/// Everything is computed eagerly in [`Group::new`], so a `Group` is
/// immutable and can be shared freely.
#[derive(Clone, Debug)]
pub struct Group {
    schema: Schema,
    elements: Vec<Element>,
    index: HashMap<Element, usize>,
    table: Vec<u32>,
    inverse: Vec<u32>,
}

/// A set of elements of one group, closed under products and inverses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    schema: SchemaId,
    elements: BTreeSet<Element>,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: &Element) -> bool {
        self.elements.contains(g)
    }

    /// Elements in lexicographic order.
    pub fn elements(&self) -> impl Iterator<Item = &Element> {
        self.elements.iter()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.elements.is_subset(&other.elements)
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        Subgroup {
            schema: self.schema,
            elements: self
                .elements
                .intersection(&other.elements)
                .copied()
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    /// Lexicographically least member.
    pub rep: Element,
    pub members: Vec<Element>,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

impl Group {
    /// Enumerate by closing {1} under right multiplication by generators,
    /// then tabulate every product.
    pub fn new(schema: Schema) -> Result<Group, GroupError> {
        let gens: Vec<Element> = (0..schema.rank()).map(|g| schema.generator(g)).collect();
        let mut seen: BTreeSet<Element> = BTreeSet::new();
        let mut queue = VecDeque::from([schema.identity()]);
        seen.insert(schema.identity());
        while let Some(x) = queue.pop_front() {
            for g in &gens {
                let y = schema.multiply(&x, g)?;
                if seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        let elements: Vec<Element> = seen.into_iter().collect();
        let index: HashMap<Element, usize> =
            elements.iter().enumerate().map(|(i, e)| (*e, i)).collect();
        let n = elements.len();
        let mut table = vec![0u32; n * n];
        for (i, x) in elements.iter().enumerate() {
            for (j, y) in elements.iter().enumerate() {
                let p = schema.multiply(x, y)?;
                let k = *index.get(&p).ok_or_else(|| {
                    GroupError::InvalidRule(format!(
                        "product leaves the enumerated set in {}",
                        schema.name()
                    ))
                })?;
                table[i * n + j] = k as u32;
            }
        }
        let mut inverse = vec![u32::MAX; n];
        for i in 0..n {
            if let Some(j) = (0..n).find(|&j| table[i * n + j] == 0) {
                inverse[i] = j as u32;
            } else {
                return Err(GroupError::InvalidRule(format!(
                    "element without inverse in {}",
                    schema.name()
                )));
            }
        }
        Ok(Group {
            schema,
            elements,
            index,
            table,
            inverse,
        })
    }

    pub fn schema(&self) -> &Schema {
        &self.schema
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// All elements, lexicographically sorted; the identity is first.
    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> Element {
        self.elements[i]
    }

    pub fn index_of(&self, g: &Element) -> Result<usize, GroupError> {
        self.index
            .get(g)
            .copied()
            .ok_or_else(|| GroupError::SchemaMismatch {
                expected: self.schema.name().to_string(),
            })
    }

    pub fn mul_idx(&self, i: usize, j: usize) -> usize {
        self.table[i * self.order() + j] as usize
    }

    pub fn inv_idx(&self, i: usize) -> usize {
        self.inverse[i] as usize
    }

    pub fn multiply(&self, g: &Element, h: &Element) -> Result<Element, GroupError> {
        Ok(self.elements[self.mul_idx(self.index_of(g)?, self.index_of(h)?)])
    }

    pub fn inverse(&self, g: &Element) -> Result<Element, GroupError> {
        Ok(self.elements[self.inv_idx(self.index_of(g)?)])
    }

    /// h g h⁻¹ on indices.
    pub fn conj_idx(&self, g: usize, h: usize) -> usize {
        self.mul_idx(self.mul_idx(h, g), self.inv_idx(h))
    }

    /// g h g⁻¹ h⁻¹ on indices.
    pub fn comm_idx(&self, g: usize, h: usize) -> usize {
        self.mul_idx(
            self.mul_idx(self.mul_idx(g, h), self.inv_idx(g)),
            self.inv_idx(h),
        )
    }

    pub fn element_order_idx(&self, i: usize) -> usize {
        let mut acc = i;
        let mut k = 1;
        while acc != 0 {
            acc = self.mul_idx(acc, i);
            k += 1;
        }
        k
    }

    fn subgroup_from_indices(&self, idx: impl IntoIterator<Item = usize>) -> Subgroup {
        Subgroup {
            schema: self.schema.id(),
            elements: idx.into_iter().map(|i| self.elements[i]).collect(),
        }
    }

    /// The subgroup generated by `gens` (closure under multiplication; in a
    /// finite group that already gives inverses).
    pub fn generated_by(&self, gens: &[Element]) -> Result<Subgroup, GroupError> {
        let gi: Vec<usize> = gens
            .iter()
            .map(|g| self.index_of(g))
            .collect::<Result<_, _>>()?;
        Ok(self.subgroup_from_indices(self.closure(&gi)))
    }

    fn closure(&self, gens: &[usize]) -> BTreeSet<usize> {
        let mut seen = BTreeSet::from([0usize]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul_idx(x, g);
                if seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    pub fn whole(&self) -> Subgroup {
        self.subgroup_from_indices(0..self.order())
    }

    /// Validate that `elements` is a subgroup of this group.
    pub fn subgroup(&self, elements: &[Element]) -> Result<Subgroup, GroupError> {
        let idx: BTreeSet<usize> = elements
            .iter()
            .map(|g| self.index_of(g))
            .collect::<Result<_, _>>()?;
        let closed = idx.contains(&0)
            && idx.iter().all(|&a| {
                idx.contains(&self.inv_idx(a))
                    && idx.iter().all(|&b| idx.contains(&self.mul_idx(a, b)))
            });
        if !closed {
            return Err(GroupError::InvalidRule(
                "element set is not closed under the group law".to_string(),
            ));
        }
        Ok(self.subgroup_from_indices(idx))
    }

    pub fn is_central_idx(&self, i: usize) -> bool {
        let n = self.order();
        (0..n).all(|j| self.table[i * n + j] == self.table[j * n + i])
    }

    pub fn center(&self) -> Subgroup {
        self.subgroup_from_indices((0..self.order()).filter(|&i| self.is_central_idx(i)))
    }

    /// Closure of the set of all commutators.
    pub fn derived_subgroup(&self) -> Subgroup {
        let n = self.order();
        let comms: BTreeSet<usize> = (0..n)
            .flat_map(|g| (0..n).map(move |h| (g, h)))
            .map(|(g, h)| self.comm_idx(g, h))
            .collect();
        let comms: Vec<usize> = comms.into_iter().collect();
        self.subgroup_from_indices(self.closure(&comms))
    }

    pub fn centralizer_order_idx(&self, i: usize) -> usize {
        let n = self.order();
        (0..n)
            .filter(|&j| self.table[i * n + j] == self.table[j * n + i])
            .count()
    }

    /// Classes sorted by representative, each with its members sorted.
    pub fn conjugacy_classes(&self) -> Vec<ConjugacyClass> {
        let n = self.order();
        let mut done = vec![false; n];
        let mut out = Vec::new();
        // Elements are sorted, so the first unvisited index is its class's
        // least member.
        for g in 0..n {
            if done[g] {
                continue;
            }
            let members: BTreeSet<usize> = (0..n).map(|h| self.conj_idx(g, h)).collect();
            for &m in &members {
                done[m] = true;
            }
            out.push(ConjugacyClass {
                rep: self.elements[g],
                members: members.into_iter().map(|m| self.elements[m]).collect(),
            });
        }
        out
    }

    /// For each element index, the position of its class in
    /// [`Group::conjugacy_classes`].
    pub fn class_index(&self, classes: &[ConjugacyClass]) -> Vec<usize> {
        let mut out = vec![usize::MAX; self.order()];
        for (c, cls) in classes.iter().enumerate() {
            for m in &cls.members {
                out[self.index[m]] = c;
            }
        }
        out
    }

    /// Exhaustive (xy)z = x(yz) over all triples; returns the first failing
    /// triple.
    pub fn check_associativity(&self) -> Result<(), (Element, Element, Element)> {
        let n = self.order();
        for x in 0..n {
            for y in 0..n {
                let xy = self.mul_idx(x, y);
                for z in 0..n {
                    if self.mul_idx(xy, z) != self.mul_idx(x, self.mul_idx(y, z)) {
                        return Err((self.elements[x], self.elements[y], self.elements[z]));
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupcore::{g27, r243};

    #[test]
    fn g27_structure() {
        let g = Group::new(g27().unwrap()).unwrap();
        assert_eq!(g.order(), 27);
        assert!(g.element(0).is_identity());
        let z = g.center();
        let x2 = g.schema().generator(1);
        assert_eq!(z, g.generated_by(&[x2]).unwrap());
        assert_eq!(g.derived_subgroup(), z);
        let classes = g.conjugacy_classes();
        assert_eq!(classes.len(), 11);
        assert_eq!(classes.iter().filter(|c| c.size() == 1).count(), 3);
        assert_eq!(classes.iter().filter(|c| c.size() == 3).count(), 8);
        assert_eq!(classes[0].members, vec![g.element(0)]);
        g.check_associativity().unwrap();
    }

    #[test]
    fn subgroup_validation() {
        let g = Group::new(g27().unwrap()).unwrap();
        let x1 = g.schema().generator(0);
        assert!(g.subgroup(&[g.element(0), x1]).is_err());
        let x1sq = g.multiply(&x1, &x1).unwrap();
        assert_eq!(g.subgroup(&[g.element(0), x1, x1sq]).unwrap().order(), 3);
    }

    #[test]
    fn r243_center_and_derived() {
        let g = Group::new(r243().unwrap()).unwrap();
        assert_eq!(g.order(), 243);
        let s = g.schema();
        let z = g.center();
        assert_eq!(z.order(), 9);
        assert!(z.elements().all(|e| e.exponents()[2..] == [0, 0, 0]));
        let d = g.derived_subgroup();
        assert_eq!(d.order(), 27);
        let expected = g
            .generated_by(&[s.generator(0), s.generator(1), s.generator(3)])
            .unwrap();
        assert_eq!(d, expected);
        assert_eq!(g.conjugacy_classes().len(), 35);
    }
}
