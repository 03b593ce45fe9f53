use crate::exactlin::{solve_commuting, Cyc9, Cyc9Matrix, CycNumber};
use crate::groupcore::{Element, GroupError, Report, Schema};
use crate::mackey::MackeyError;

use super::rep::{Label, Representation};
use super::RepError;

/// Conjugation by a fixed generator w of `big` on the normal subgroup
/// presented by `sub`, whose generators are named as in `big`.
#[derive(Clone, Debug)]
pub struct WAction {
    big: Schema,
    sub: Schema,
    w: Element,
    w_gen: usize,
    /// big generator index of each sub generator
    embed: Vec<usize>,
}

impl WAction {
    pub fn new(big: &Schema, sub: &Schema, w: &str) -> Result<Self, RepError> {
        let embed = sub
            .generators()
            .iter()
            .map(|g| big.gen_index(g))
            .collect::<Result<Vec<_>, _>>()?;
        let w_gen = big.gen_index(w)?;
        if embed.contains(&w_gen) {
            return Err(GroupError::InvalidRule(format!("{w} lies in {}", sub.name())).into());
        }
        Ok(WAction {
            big: big.clone(),
            sub: sub.clone(),
            w: big.generator(w_gen),
            w_gen,
            embed,
        })
    }

    pub fn big(&self) -> &Schema {
        &self.big
    }

    pub fn sub(&self) -> &Schema {
        &self.sub
    }

    pub fn w_gen(&self) -> usize {
        self.w_gen
    }

    fn to_big(&self, u: &Element) -> Result<Element, RepError> {
        let mut e = vec![0u8; self.big.rank()];
        for (i, &x) in u.exponents().iter().enumerate() {
            e[self.embed[i]] = x;
        }
        Ok(self.big.element(&e)?)
    }

    fn to_sub(&self, g: &Element) -> Result<Element, RepError> {
        let mut e = vec![0u8; self.sub.rank()];
        for (b, &x) in g.exponents().iter().enumerate() {
            match self.embed.iter().position(|&k| k == b) {
                Some(i) => e[i] = x,
                None if x == 0 => {}
                None => {
                    return Err(MackeyError::NotInvariant(self.big.format_element(&self.w)).into())
                }
            }
        }
        Ok(self.sub.element(&e)?)
    }

    /// w^i u w^{-i}.
    pub fn apply(&self, i: u32, u: &Element) -> Result<Element, RepError> {
        let wi = self.big.power(&self.w, i)?;
        let c = self.big.conjugate(&self.to_big(u)?, &wi)?;
        self.to_sub(&c)
    }
}

/// The normalized intertwiner and the data it was chosen from.
#[derive(Clone, Debug)]
pub struct Intertwiner {
    pub matrix: Cyc9Matrix,
    /// The three solutions with X³ = I, in the order c·Y, ωc·Y, ω²c·Y.
    pub candidates: Vec<Cyc9Matrix>,
    pub solution_dim: usize,
}

/// Solve ρ(w u w⁻¹) X = X ρ(u) over the generators u of the subgroup,
/// scale to X³ = I, and pick the cube-root normalization: the one with
/// trace equal to `trace_target` if any, else the one whose first nonzero
/// entry has its leading ζ-coordinate at argument in (−π/3, π/3].
///
/// X³ = I can force the scale factor out of ℚ(ω); it is then a cube root
/// in ℚ(ζ₉) and X has entries there.
pub fn solve_intertwiner(
    rho: &Representation,
    action: &WAction,
    trace_target: Option<&CycNumber>,
) -> Result<Intertwiner, RepError> {
    let sub = action.sub();
    if rho.schema().id() != sub.id() {
        return Err(RepError::SchemaMismatch {
            expected: sub.name().to_string(),
            found: rho.schema().name().to_string(),
        });
    }
    let constraints = (0..sub.rank())
        .map(|g| {
            Ok((
                rho.evaluate(&action.apply(1, &sub.generator(g))?)?,
                rho.image(g).clone(),
            ))
        })
        .collect::<Result<Vec<_>, RepError>>()?;
    let basis = solve_commuting(&constraints, rho.dim())?;
    if basis.len() != 1 {
        return Err(RepError::IntertwinerDimension(basis.len()));
    }
    let y = &basis[0];
    let cube = y.pow(3)?;
    let c = cube
        .as_scalar()
        .ok_or_else(|| RepError::NoCubeRoot(format!("non-scalar {cube}")))?;
    let c = c
        .as_cyc()
        .ok_or_else(|| RepError::NoCubeRoot(c.to_string()))?;
    let roots = Cyc9::cube_roots_of(&c.inv()?);
    let lambda = roots
        .first()
        .ok_or_else(|| RepError::NoCubeRoot(c.to_string()))?;
    let base = y.scale(lambda);
    let candidates: Vec<Cyc9Matrix> = (0..3)
        .map(|k| base.scale(&Cyc9::from(CycNumber::root_of_unity(k))))
        .collect();

    let by_trace =
        trace_target.and_then(|t| candidates.iter().find(|m| m.trace() == Cyc9::from(t)));
    let matrix = match by_trace {
        Some(m) => m.clone(),
        None => candidates
            .iter()
            .find(|m| {
                m.first_nonzero()
                    .and_then(|(_, f)| f.leading_coord())
                    .is_some_and(|(_, q)| in_principal_sector(q))
            })
            .expect("exactly one of f, ωf, ω²f lies in the principal sector")
            .clone(),
    };
    Ok(Intertwiner {
        matrix,
        candidates,
        solution_dim: basis.len(),
    })
}

/// arg z ∈ (−π/3, π/3]; for z = a + bω this is a > 0 and b ≤ a.
fn in_principal_sector(z: &CycNumber) -> bool {
    !z.re1().is_negative() && !z.re1().is_zero() && z.rew() <= z.re1()
}

/// The representation u ↦ ρ(u), w ↦ ω^r·J of the whole group.
pub fn extend_and_tensor(
    rho: &Representation,
    action: &WAction,
    jw: &Cyc9Matrix,
    r: u8,
    label: Label,
) -> Result<Representation, RepError> {
    let big = action.big();
    let images = (0..big.rank())
        .map(|g| {
            if g == action.w_gen() {
                Ok(jw.scale(&Cyc9::from(CycNumber::root_of_unity(r as i64))))
            } else {
                let i = action.embed.iter().position(|&k| k == g).ok_or_else(|| {
                    GroupError::InvalidRule(format!(
                        "{} is neither w nor in {}",
                        big.generators()[g],
                        action.sub().name()
                    ))
                })?;
                Ok(rho.image(i).clone())
            }
        })
        .collect::<Result<Vec<_>, RepError>>()?;
    Representation::new(big.clone(), images, label)
}

/// Given X solving the i = 1 equation, check that X² solves the i = 2
/// equation and that X³ commutes with ρ.
pub fn intertwiner_power_identities(
    rho: &Representation,
    action: &WAction,
    x: &Cyc9Matrix,
) -> Result<Report, RepError> {
    let sub = action.sub();
    let mut report = Report::new(format!("powers of the intertwiner for {}", rho.name()));
    for i in 1..=3u32 {
        let xi = x.pow(i as i64)?;
        let mut ok = true;
        for g in 0..sub.rank() {
            let u = sub.generator(g);
            let lhs = &rho.evaluate(&action.apply(i, &u)?)? * &xi;
            let rhs = &xi * rho.image(g);
            ok &= lhs == rhs;
        }
        report.push(&format!("rho(w^{i} u w^-{i}) X^{i} = X^{i} rho(u)"), ok, "");
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn principal_sector() {
        let w = CycNumber::root_of_unity;
        assert!(in_principal_sector(&w(0)));
        assert!(!in_principal_sector(&w(1)));
        assert!(!in_principal_sector(&w(2)));
        assert!(in_principal_sector(&-&w(2)));
        assert!(!in_principal_sector(&-&w(1)));
        assert!(!in_principal_sector(&CycNumber::zero()));
    }
}
