use std::fmt;

use crate::exactlin::{Cyc9, Cyc9Matrix, CycMatrix, CycNumber};
use crate::groupcore::{Element, Homomorphism, MultiplierSlot, Report, Schema};

use super::{RepError, SpinType};

/// Names of the representations in the catalog. Exponents are stored
/// mod 3, so ε = −1 appears as 2.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    /// One-dimensional Π_{m,0,q}: x₁ ↦ ω^m, x₃ ↦ ω^q.
    Linear { m: u8, q: u8 },
    /// Three-dimensional Π_{0,n} induced from ρ_{0,n}.
    Induced { n: u8 },
    /// Π_{ε,0;r}.
    EpsSpin { eps: u8, r: u8 },
    /// Π_{0,μ;t}.
    MuSpin { mu: u8, t: u8 },
    /// Π_{ε,μ;s}.
    PureSpin { eps: u8, mu: u8, s: u8 },
    /// Intermediate objects (P_{ε,0}, π⁰, test fixtures).
    Other(String),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Linear { m, q } => write!(f, "Pi_{{{m},0,{q}}}"),
            Label::Induced { n } => write!(f, "Pi_{{0,{n}}}"),
            Label::EpsSpin { eps, r } => write!(f, "Pi_{{{eps},0;{r}}}"),
            Label::MuSpin { mu, t } => write!(f, "Pi_{{0,{mu};{t}}}"),
            Label::PureSpin { eps, mu, s } => write!(f, "Pi_{{{eps},{mu};{s}}}"),
            Label::Other(s) => f.write_str(s),
        }
    }
}

/// Generator images of a matrix representation of a schema.
#[derive(Clone, Debug)]
pub struct Representation {
    schema: Schema,
    images: Vec<Cyc9Matrix>,
    spin: SpinType,
    label: Label,
}

impl Representation {
    /// The spin type is read off the multiplier generators; a generator
    /// whose image is not a scalar cube root of unity leaves its slot at 0
    /// and is caught by [`verify_rep`].
    pub fn new(schema: Schema, images: Vec<Cyc9Matrix>, label: Label) -> Result<Self, RepError> {
        if images.len() != schema.rank() {
            return Err(RepError::SchemaMismatch {
                expected: format!("{} images for {}", schema.rank(), schema.name()),
                found: format!("{} images", images.len()),
            });
        }
        let dim = images[0].dim();
        if let Some(bad) = images.iter().find(|m| m.dim() != dim) {
            return Err(crate::exactlin::ArithError::DimensionMismatch {
                left: dim,
                right: bad.dim(),
            }
            .into());
        }
        let mut spin = SpinType::NON_SPIN;
        for &(g, slot) in schema.multiplier() {
            let k = images[g]
                .as_scalar()
                .and_then(|c| c.as_cyc())
                .and_then(|c| c.root_of_unity_exponent())
                .unwrap_or(0);
            match slot {
                MultiplierSlot::Eps => spin.eps = k,
                MultiplierSlot::Mu => spin.mu = k,
            }
        }
        Ok(Representation {
            schema,
            images,
            spin,
            label,
        })
    }

    /// A representation whose images all lie over ℚ(ω).
    pub fn from_cyc(
        schema: Schema,
        images: Vec<CycMatrix>,
        label: Label,
    ) -> Result<Self, RepError> {
        Representation::new(
            schema,
            images.into_iter().map(Cyc9Matrix::from).collect(),
            label,
        )
    }

    pub fn schema(&self) -> &Schema {
        &self.schema
    }

    pub fn dim(&self) -> usize {
        self.images[0].dim()
    }

    pub fn spin_type(&self) -> SpinType {
        self.spin
    }

    pub fn label(&self) -> &Label {
        &self.label
    }

    pub fn name(&self) -> String {
        self.label.to_string()
    }

    pub fn with_label(mut self, label: Label) -> Self {
        self.label = label;
        self
    }

    pub fn images(&self) -> &[Cyc9Matrix] {
        &self.images
    }

    pub fn image(&self, gen: usize) -> &Cyc9Matrix {
        &self.images[gen]
    }

    /// Replace one generator image, e.g. to build a negative control.
    pub fn with_image(&self, gen: usize, m: impl Into<Cyc9Matrix>) -> Result<Self, RepError> {
        let mut images = self.images.clone();
        images[gen] = m.into();
        Representation::new(self.schema.clone(), images, self.label.clone())
    }

    /// Image of a normal-form element: ∏ ρ(g_i)^{e_i}.
    pub fn evaluate(&self, g: &Element) -> Result<Cyc9Matrix, RepError> {
        if g.schema_id() != self.schema.id() {
            return Err(RepError::SchemaMismatch {
                expected: self.schema.name().to_string(),
                found: format!("{g:?}"),
            });
        }
        let mut acc = Cyc9Matrix::identity(self.dim());
        for (i, &e) in g.exponents().iter().enumerate() {
            for _ in 0..e {
                acc = &acc * &self.images[i];
            }
        }
        Ok(acc)
    }

    pub fn character_at(&self, g: &Element) -> Result<Cyc9, RepError> {
        Ok(self.evaluate(g)?.trace())
    }
}

/// Check every defining relation of the schema as a matrix identity, and
/// that the multiplier generators act by the scalars of the spin type.
pub fn verify_rep(r: &Representation) -> Result<Report, RepError> {
    let s = r.schema();
    let mut report = Report::new(format!("{} on {}", r.name(), s.name()));
    for rel in s.relations() {
        let mut lhs = Cyc9Matrix::identity(r.dim());
        for &(g, e) in &rel.lhs {
            let m = r.image(g).pow(e as i64)?;
            lhs = &lhs * &m;
        }
        let rhs = r.evaluate(&rel.rhs)?;
        if lhs == rhs {
            report.push(&rel.text, true, "");
        } else {
            report.push(&rel.text, false, format!("lhs {lhs}, rhs {rhs}"));
        }
    }
    for &(g, slot) in s.multiplier() {
        let k = match slot {
            MultiplierSlot::Eps => r.spin.eps,
            MultiplierSlot::Mu => r.spin.mu,
        };
        let expected = Cyc9Matrix::scalar(r.dim(), &Cyc9::from(CycNumber::root_of_unity(k as i64)));
        let ok = *r.image(g) == expected;
        report.push(
            &format!("{} acts by w^{k}", s.generators()[g]),
            ok,
            if ok {
                String::new()
            } else {
                format!("image {}", r.image(g))
            },
        );
    }
    Ok(report)
}

/// Precompose with a covering projection `big → r.schema()`.
pub fn inflate(r: &Representation, projection: &Homomorphism) -> Result<Representation, RepError> {
    if projection.target().id() != r.schema().id() {
        return Err(RepError::SchemaMismatch {
            expected: r.schema().name().to_string(),
            found: projection.target().name().to_string(),
        });
    }
    let big = projection.source();
    let images = (0..big.rank())
        .map(|g| r.evaluate(&projection.apply(&big.generator(g))?))
        .collect::<Result<Vec<_>, _>>()?;
    Representation::new(big.clone(), images, r.label().clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupcore::g27;

    fn w(k: i64) -> CycNumber {
        CycNumber::root_of_unity(k)
    }

    #[test]
    fn one_dimensional_rep_of_g27() {
        let s = g27().unwrap();
        let one = |k| CycMatrix::scalar(1, &w(k));
        let r = Representation::from_cyc(
            s,
            vec![one(1), one(0), one(2)],
            Label::Linear { m: 1, q: 2 },
        )
        .unwrap();
        assert!(verify_rep(&r).unwrap().passed());
        assert_eq!(r.name(), "Pi_{1,0,2}");
        let bad = r.with_image(1, one(1)).unwrap();
        let report = verify_rep(&bad).unwrap();
        assert!(!report.passed());
    }

    #[test]
    fn labels_sort_by_kind() {
        let mut v = [
            Label::Induced { n: 1 },
            Label::Linear { m: 2, q: 0 },
            Label::Linear { m: 0, q: 1 },
        ];
        v.sort();
        assert_eq!(v[0], Label::Linear { m: 0, q: 1 });
        assert_eq!(
            Label::PureSpin {
                eps: 2,
                mu: 1,
                s: 0
            }
            .to_string(),
            "Pi_{2,1;0}"
        );
    }
}
