//! Little-group machinery for U ⋊ W with U abelian: the dual of U, the
//! action of W on it, orbits with stabilizers, and matrix induction over a
//! coset section.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::sync::Arc;

use crate::exactlin::{CycMatrix, CycNumber};
use crate::groupcore::{Element, Group, GroupError, Schema};
use crate::spinrep::{Label, RepError, Representation};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MackeyError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("generators {0} and {1} do not commute")]
    NotAbelian(String, String),
    #[error("generators are not independent elements of order 3")]
    NotIndependent,
    #[error("conjugation by {0} does not preserve the subgroup")]
    NotInvariant(String),
    #[error("character label {0:?} does not match the domain")]
    BadLabel(Vec<u8>),
    #[error("section is not a transversal: {0}")]
    NotTransversal(String),
}

/// An elementary abelian 3-subgroup with a chosen basis of generators.
#[derive(Debug)]
pub struct AbelianSubgroup {
    schema: Schema,
    gens: Vec<Element>,
    coords: HashMap<Element, Vec<u8>>,
}

impl AbelianSubgroup {
    /// `gens` must commute pairwise, have order 3, and span a group of
    /// order 3^len.
    pub fn new(schema: &Schema, gens: &[Element]) -> Result<Arc<Self>, MackeyError> {
        for (i, a) in gens.iter().enumerate() {
            if schema.element_order(a)? != 3 {
                return Err(MackeyError::NotIndependent);
            }
            for b in &gens[i + 1..] {
                if schema.multiply(a, b)? != schema.multiply(b, a)? {
                    return Err(MackeyError::NotAbelian(
                        schema.format_element(a),
                        schema.format_element(b),
                    ));
                }
            }
        }
        let mut coords = HashMap::new();
        let k = gens.len();
        for code in 0..3usize.pow(k as u32) {
            let c: Vec<u8> = (0..k)
                .map(|i| ((code / 3usize.pow((k - 1 - i) as u32)) % 3) as u8)
                .collect();
            let mut u = schema.identity();
            for (g, &e) in gens.iter().zip(&c) {
                u = schema.multiply(&u, &schema.power(g, e as u32)?)?;
            }
            if coords.insert(u, c).is_some() {
                return Err(MackeyError::NotIndependent);
            }
        }
        Ok(Arc::new(AbelianSubgroup {
            schema: schema.clone(),
            gens: gens.to_vec(),
            coords,
        }))
    }

    pub fn schema(&self) -> &Schema {
        &self.schema
    }

    pub fn gens(&self) -> &[Element] {
        &self.gens
    }

    pub fn order(&self) -> usize {
        self.coords.len()
    }

    pub fn contains(&self, u: &Element) -> bool {
        self.coords.contains_key(u)
    }

    /// Exponents of `u` in the chosen basis.
    pub fn coords(&self, u: &Element) -> Option<&[u8]> {
        self.coords.get(u).map(Vec::as_slice)
    }

    pub fn elements(&self) -> impl Iterator<Item = &Element> {
        self.coords.keys()
    }
}

/// χ with χ(gens[i]) = ω^label[i].
#[derive(Clone, Debug)]
pub struct DualCharacter {
    domain: Arc<AbelianSubgroup>,
    label: Vec<u8>,
}

impl PartialEq for DualCharacter {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.domain, &other.domain) && self.label == other.label
    }
}

impl Eq for DualCharacter {}

impl DualCharacter {
    pub fn new(domain: &Arc<AbelianSubgroup>, label: &[u8]) -> Result<Self, MackeyError> {
        if label.len() != domain.gens.len() || label.iter().any(|&e| e > 2) {
            return Err(MackeyError::BadLabel(label.to_vec()));
        }
        Ok(DualCharacter {
            domain: domain.clone(),
            label: label.to_vec(),
        })
    }

    pub fn domain(&self) -> &Arc<AbelianSubgroup> {
        &self.domain
    }

    pub fn label(&self) -> &[u8] {
        &self.label
    }

    /// k with χ(u) = ω^k, or `None` outside the domain.
    pub fn exponent(&self, u: &Element) -> Option<u8> {
        let c = self.domain.coords(u)?;
        Some(
            (c.iter()
                .zip(&self.label)
                .map(|(&a, &b)| (a * b) as u32)
                .sum::<u32>()
                % 3) as u8,
        )
    }

    pub fn value(&self, u: &Element) -> Option<CycNumber> {
        self.exponent(u).map(|k| CycNumber::root_of_unity(k as i64))
    }
}

/// All 3^k characters of the domain, labels in lexicographic order.
pub fn dual_group(domain: &Arc<AbelianSubgroup>) -> Vec<DualCharacter> {
    let k = domain.gens.len();
    (0..3usize.pow(k as u32))
        .map(|code| {
            let label: Vec<u8> = (0..k)
                .map(|i| ((code / 3usize.pow((k - 1 - i) as u32)) % 3) as u8)
                .collect();
            DualCharacter {
                domain: domain.clone(),
                label,
            }
        })
        .collect()
}

/// (ʷχ)(u) = χ(w⁻¹uw).
pub fn act_on_dual(w: &Element, chi: &DualCharacter) -> Result<DualCharacter, MackeyError> {
    let s = &chi.domain.schema;
    let winv = s.inverse(w)?;
    let mut label = Vec::with_capacity(chi.label.len());
    for u in &chi.domain.gens {
        let c = s.multiply(&s.multiply(&winv, u)?, w)?;
        let k = chi
            .exponent(&c)
            .ok_or_else(|| MackeyError::NotInvariant(s.format_element(w)))?;
        label.push(k);
    }
    Ok(DualCharacter {
        domain: chi.domain.clone(),
        label,
    })
}

#[derive(Clone, Debug)]
pub struct Orbit {
    /// Member with the lexicographically least label.
    pub rep: DualCharacter,
    pub members: Vec<DualCharacter>,
    pub stabilizer: Vec<Element>,
}

#[derive(Clone, Debug)]
pub struct OrbitDecomposition {
    pub acting_order: usize,
    pub orbits: Vec<Orbit>,
}

/// Orbits of W = ⟨w_gens⟩ on `dual`, sorted by representative label.
pub fn orbit_decomposition(
    dual: &[DualCharacter],
    w_gens: &[Element],
) -> Result<OrbitDecomposition, MackeyError> {
    let Some(first) = dual.first() else {
        return Ok(OrbitDecomposition {
            acting_order: 1,
            orbits: Vec::new(),
        });
    };
    let s = first.domain.schema.clone();
    let mut w_elems = BTreeSet::from([s.identity()]);
    let mut queue = VecDeque::from([s.identity()]);
    while let Some(x) = queue.pop_front() {
        for g in w_gens {
            let y = s.multiply(&x, g)?;
            if w_elems.insert(y) {
                queue.push_back(y);
            }
        }
    }

    let mut seen: BTreeSet<Vec<u8>> = BTreeSet::new();
    let mut orbits = Vec::new();
    for chi in dual {
        if seen.contains(&chi.label) {
            continue;
        }
        let mut members: BTreeMap<Vec<u8>, DualCharacter> = BTreeMap::new();
        let mut stabilizer = Vec::new();
        for w in &w_elems {
            let image = act_on_dual(w, chi)?;
            if image.label == chi.label {
                stabilizer.push(*w);
            }
            members.insert(image.label.clone(), image);
        }
        seen.extend(members.keys().cloned());
        let members: Vec<DualCharacter> = members.into_values().collect();
        orbits.push(Orbit {
            rep: members[0].clone(),
            members,
            stabilizer,
        });
    }
    orbits.sort_by(|a, b| a.rep.label.cmp(&b.rep.label));
    Ok(OrbitDecomposition {
        acting_order: w_elems.len(),
        orbits,
    })
}

/// A representation of a subgroup H, given on all of H.
pub trait SubgroupRep {
    fn dim(&self) -> usize;
    /// `None` when `h` is outside H.
    fn image(&self, h: &Element) -> Option<CycMatrix>;
    fn subgroup_order(&self) -> usize;
}

impl SubgroupRep for DualCharacter {
    fn dim(&self) -> usize {
        1
    }

    fn image(&self, h: &Element) -> Option<CycMatrix> {
        self.value(h).map(|v| CycMatrix::scalar(1, &v))
    }

    fn subgroup_order(&self) -> usize {
        self.domain.order()
    }
}

/// Induce ρ from H to G on the basis ordered by `section`: writing
/// s_i·y = h_i·s_σ(i) with h_i ∈ H, the image of y has the block ρ(h_i) at
/// (i, σ(i)).
pub fn induce(
    g: &Group,
    rho: &dyn SubgroupRep,
    section: &[Element],
    label: Label,
) -> Result<Representation, RepError> {
    let s = g.schema();
    if section.len() * rho.subgroup_order() != g.order() {
        return Err(MackeyError::NotTransversal(format!(
            "{} cosets of a subgroup of order {} in a group of order {}",
            section.len(),
            rho.subgroup_order(),
            g.order()
        ))
        .into());
    }
    let inv: Vec<Element> = section
        .iter()
        .map(|x| s.inverse(x))
        .collect::<Result<_, _>>()?;
    for i in 0..section.len() {
        for j in 0..i {
            if rho.image(&s.multiply(&section[i], &inv[j])?).is_some() {
                return Err(MackeyError::NotTransversal(format!(
                    "{} and {} lie in the same coset",
                    s.format_element(&section[i]),
                    s.format_element(&section[j])
                ))
                .into());
            }
        }
    }

    let (k, d) = (section.len(), rho.dim());
    let mut images = Vec::with_capacity(s.rank());
    for gen in 0..s.rank() {
        let y = s.generator(gen);
        let mut m = CycMatrix::zeros(k * d);
        for i in 0..k {
            let sy = s.multiply(&section[i], &y)?;
            let (j, block) = (0..k)
                .find_map(|j| rho.image(&s.multiply(&sy, &inv[j]).ok()?).map(|b| (j, b)))
                .ok_or_else(|| {
                    MackeyError::NotTransversal(format!(
                        "no coset contains {}",
                        s.format_element(&sy)
                    ))
                })?;
            for a in 0..d {
                for b in 0..d {
                    m.set(i * d + a, j * d + b, block.get(a, b).clone());
                }
            }
        }
        images.push(m);
    }
    Representation::from_cyc(s.clone(), images, label)
}
