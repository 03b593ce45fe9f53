use crate::exactlin::{CycMatrix, CycNumber};
use crate::groupcore::{g27, g81, gbar, r243, Group, GroupError, Homomorphism, Schema};
use crate::mackey::{dual_group, induce, orbit_decomposition, AbelianSubgroup, DualCharacter};

use super::classical::{extend_and_tensor, solve_intertwiner, Intertwiner, WAction};
use super::rep::{inflate, Label, Representation};
use super::{RepError, SpinType};

/// The covering projection from R243 onto one of its quotients `G27`,
/// `G81` (kernel ⟨z₂₃⟩) or `GBAR` (kernel ⟨z₁₂⟩).
pub fn projection_from_r243(target: &str) -> Result<Homomorphism, RepError> {
    let big = r243()?;
    let h = match target {
        "G27" => Homomorphism::from_words(
            big,
            g27()?,
            &[
                ("z12", "1"),
                ("z23", "1"),
                ("n1", "x1"),
                ("n2", "x2"),
                ("n3", "x3"),
            ],
        )?,
        "G81" => Homomorphism::from_words(
            big,
            g81()?,
            &[
                ("z12", "z12"),
                ("z23", "1"),
                ("n1", "xi1"),
                ("n2", "xi2"),
                ("n3", "xi3"),
            ],
        )?,
        "GBAR" => Homomorphism::from_words(
            big,
            gbar()?,
            &[
                ("z12", "1"),
                ("z23", "z23"),
                ("n1", "xi1"),
                ("n2", "xi2"),
                ("n3", "xi3"),
            ],
        )?,
        other => return Err(GroupError::UnknownSchema(other.to_string()).into()),
    };
    Ok(h)
}

/// Push an R243 representation down to the quotient `target` (`G27`,
/// `G81` or `GBAR`); fails unless the kernel of the projection acts
/// trivially.
pub fn descend(r: &Representation, target: &str) -> Result<Representation, RepError> {
    let p = projection_from_r243(target)?;
    let big = p.source();
    if r.schema().id() != big.id() {
        return Err(RepError::SchemaMismatch {
            expected: big.name().to_string(),
            found: r.schema().name().to_string(),
        });
    }
    let small = p.target();
    let mut images = vec![None; small.rank()];
    for g in 0..big.rank() {
        let img = p.apply(&big.generator(g))?;
        if img.is_identity() {
            if !r.image(g).is_identity() {
                return Err(RepError::BadSpinType(format!(
                    "{} does not factor through {target}: {} acts nontrivially",
                    r.name(),
                    big.generators()[g]
                )));
            }
        } else if let Some(k) = (0..small.rank()).find(|&k| small.generator(k) == img) {
            images[k] = Some(r.image(g).clone());
        }
    }
    let images = images
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| RepError::SchemaMismatch {
            expected: target.to_string(),
            found: "projection not onto generators".to_string(),
        })?;
    Representation::new(small.clone(), images, r.label().clone())
}

/// Π_{m,0,q} on G27: x₁ ↦ ω^m, x₂ ↦ 1, x₃ ↦ ω^q.
pub fn linear_pi(m: u8, q: u8) -> Result<Representation, RepError> {
    let one = |k: u8| CycMatrix::scalar(1, &CycNumber::root_of_unity(k as i64));
    Representation::from_cyc(
        g27()?,
        vec![one(m), one(0), one(q)],
        Label::Linear { m: m % 3, q: q % 3 },
    )
}

/// Π_{0,n} on G27, induced from ρ_{0,n} on X₁ × X₂ over the section
/// (1, x₃, x₃²).
pub fn induced_pi_0n(n: u8) -> Result<Representation, RepError> {
    let s = g27()?;
    let g = Group::new(s.clone())?;
    let u = AbelianSubgroup::new(&s, &[s.generator(0), s.generator(1)])?;
    let chi = DualCharacter::new(&u, &[0, n % 3])?;
    let x3 = s.generator(2);
    let section = [s.identity(), x3, s.power(&x3, 2)?];
    induce(&g, &chi, &section, Label::Induced { n: n % 3 })
}

/// Everything the classical method needs for one spin-nontrivial family:
/// the W-invariant IR ρ of the normal subgroup, the action of w, and the
/// trace used to pick the cube-root normalization.
#[derive(Clone, Debug)]
pub struct ClassicalSetup {
    pub rho: Representation,
    pub action: WAction,
    pub trace_target: CycNumber,
}

impl ClassicalSetup {
    pub fn intertwiner(&self) -> Result<Intertwiner, RepError> {
        solve_intertwiner(&self.rho, &self.action, Some(&self.trace_target))
    }

    /// The three extensions u ↦ ρ(u), w ↦ ω^r J (r = 0, 1, 2), on the
    /// schema of the setup.
    pub fn family(&self, label: impl Fn(u8) -> Label) -> Result<Vec<Representation>, RepError> {
        let j = self.intertwiner()?.matrix;
        (0..3)
            .map(|r| extend_and_tensor(&self.rho, &self.action, &j, r, label(r)))
            .collect()
    }
}

/// −σ(ω − ω²), with σ ∈ {1, −1} the signed form of the exponent.
fn trace_target(sigma: u8) -> CycNumber {
    let i_sqrt3 = &CycNumber::root_of_unity(1) - &CycNumber::root_of_unity(2);
    let signed = if sigma % 3 == 2 {
        -1
    } else {
        (sigma % 3) as i64
    };
    -(&i_sqrt3 * &CycNumber::from(signed))
}

/// Build ρ on `sub ⊂ big` by inducing the character `label` of the abelian
/// subgroup spanned by `domain` over the section (1, s, s²), and prepare
/// the action of `w`.
fn heisenberg_setup(
    big: &Schema,
    sub_name: &str,
    sub_gens: &[&str],
    domain: &[&str],
    label: &[u8],
    step: &str,
    w: &str,
    sigma: u8,
    rho_label: Label,
) -> Result<ClassicalSetup, RepError> {
    let sub = big.subschema(sub_name, sub_gens)?;
    let gens = domain
        .iter()
        .map(|g| Ok(sub.generator(sub.gen_index(g)?)))
        .collect::<Result<Vec<_>, GroupError>>()?;
    let dom = AbelianSubgroup::new(&sub, &gens)?;
    let chi = DualCharacter::new(&dom, label)?;
    let s = sub.generator(sub.gen_index(step)?);
    let section = [sub.identity(), s, sub.power(&s, 2)?];
    let rho = induce(&Group::new(sub.clone())?, &chi, &section, rho_label)?;
    let action = WAction::new(big, &sub, w)?;
    Ok(ClassicalSetup {
        rho,
        action,
        trace_target: trace_target(sigma),
    })
}

/// The classical-method data for a spin-nontrivial type, on the schema the
/// catalog uses for it: G81 for (ε,0), GBAR for (0,μ), R243 for (ε,μ).
pub fn classical_setup(st: SpinType) -> Result<ClassicalSetup, RepError> {
    let (e, m) = (st.eps, st.mu);
    match (e, m) {
        (0, 0) => Err(RepError::BadSpinType(
            "the non-spin type uses Mackey induction only".to_string(),
        )),
        (e, 0) => heisenberg_setup(
            &g81()?,
            "U",
            &["z12", "xi1", "xi2"],
            &["z12", "xi1"],
            &[e, 0],
            "xi2",
            "xi3",
            e,
            Label::Other(format!("P_{{{e},0}}")),
        ),
        (0, m) => heisenberg_setup(
            &gbar()?,
            "U'",
            &["z23", "xi2", "xi3"],
            &["z23", "xi2"],
            &[m, 0],
            "xi3",
            "xi1",
            m,
            Label::Other(format!("P_{{0,{m}}}")),
        ),
        (e, m) => heisenberg_setup(
            &r243()?,
            "U~",
            &["z12", "z23", "n1", "n2"],
            &["z12", "z23", "n1"],
            &[e, m, 0],
            "n2",
            "n3",
            e,
            Label::Other(format!("P_{{{e},{m}}}")),
        ),
    }
}

/// The (0,μ) family built directly on R243 with the normal subgroup
/// ⟨z₁₂, z₂₃, η₂, η₃⟩ and w = η₁, bypassing GBAR.
pub fn irreps_partially_spin_mu_direct(mu: u8) -> Result<Vec<Representation>, RepError> {
    let mu = mu % 3;
    if mu == 0 {
        return Err(RepError::BadSpinType("mu must be nonzero".to_string()));
    }
    let setup = heisenberg_setup(
        &r243()?,
        "U*",
        &["z12", "z23", "n2", "n3"],
        &["z12", "z23", "n2"],
        &[0, mu, 0],
        "n3",
        "n1",
        mu,
        Label::Other(format!("P*_{{0,{mu}}}")),
    )?;
    setup.family(|t| Label::MuSpin { mu, t })
}

/// Complete list of inequivalent IRs of R243 of the given spin type.
pub fn irreps_by_spin_type(st: SpinType) -> Result<Vec<Representation>, RepError> {
    let reps = match (st.eps, st.mu) {
        (0, 0) => {
            let mut v = Vec::new();
            // The fixed points ρ_{m,0} extend to Π_{m,0,q}; each free orbit
            // gives one induced Π_{0,n}.
            let s = g27()?;
            let u = AbelianSubgroup::new(&s, &[s.generator(0), s.generator(1)])?;
            let orbits = orbit_decomposition(&dual_group(&u), &[s.generator(2)])?;
            for o in &orbits.orbits {
                let (m, n) = (o.rep.label()[0], o.rep.label()[1]);
                if o.members.len() == 1 {
                    for q in 0..3 {
                        v.push(linear_pi(m, q)?);
                    }
                } else {
                    v.push(induced_pi_0n(n)?);
                }
            }
            let p = projection_from_r243("G27")?;
            v.iter()
                .map(|r| inflate(r, &p))
                .collect::<Result<Vec<_>, _>>()?
        }
        (e, 0) => {
            let p = projection_from_r243("G81")?;
            let fam = classical_setup(st)?.family(|r| Label::EpsSpin { eps: e, r })?;
            fam.iter()
                .map(|r| inflate(r, &p))
                .collect::<Result<Vec<_>, _>>()?
        }
        (0, m) => {
            let p = projection_from_r243("GBAR")?;
            let fam = classical_setup(st)?.family(|t| Label::MuSpin { mu: m, t })?;
            fam.iter()
                .map(|r| inflate(r, &p))
                .collect::<Result<Vec<_>, _>>()?
        }
        (e, m) => classical_setup(st)?.family(|s| Label::PureSpin { eps: e, mu: m, s })?,
    };
    let mut reps = reps;
    reps.sort_by(|a, b| a.label().cmp(b.label()));
    Ok(reps)
}

/// All 35 IRs of R243, sorted by (spin type, label).
#[derive(Clone, Debug)]
pub struct Catalog {
    pub reps: Vec<Representation>,
}

impl Catalog {
    pub fn by_spin_type(&self, st: SpinType) -> impl Iterator<Item = &Representation> {
        self.reps.iter().filter(move |r| r.spin_type() == st)
    }

    pub fn find(&self, name: &str) -> Option<&Representation> {
        self.reps.iter().find(|r| r.name() == name)
    }
}

pub fn full_catalog() -> Result<Catalog, RepError> {
    let mut reps = Vec::new();
    for st in SpinType::all() {
        reps.extend(irreps_by_spin_type(st)?);
    }
    Ok(Catalog { reps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spinrep::{character, intertwiner_power_identities, verify_rep, ClassData};

    fn w(k: i64) -> CycNumber {
        CycNumber::root_of_unity(k)
    }

    #[test]
    fn p_eps_0_matches_closed_form() {
        for e in 1..3u8 {
            let setup = classical_setup(SpinType::new(e as i64, 0)).unwrap();
            let rho = &setup.rho;
            assert!(verify_rep(rho).unwrap().passed());
            let ei = e as i64;
            assert_eq!(rho.image(0).as_cyc(), Some(CycMatrix::scalar(3, &w(ei))));
            assert_eq!(
                rho.image(1).as_cyc(),
                Some(CycMatrix::diagonal(&[w(0), w(-ei), w(ei)]))
            );
            assert_eq!(rho.image(2).as_cyc(), Some(CycMatrix::shift(3)));
        }
    }

    #[test]
    fn partially_spin_closed_form() {
        for e in 1..3i64 {
            let setup = classical_setup(SpinType::new(e, 0)).unwrap();
            let j = setup.intertwiner().unwrap().matrix.as_cyc().unwrap();
            let signed = if e == 2 { -1 } else { e };
            let alpha = &(&w(1) - &w(2)) * &CycNumber::from(-signed);
            let alpha = alpha.checked_div(&CycNumber::from(3)).unwrap();
            let form = CycMatrix::identity(3)
                .add(&CycMatrix::shift(3).scale(&w(-e)))
                .unwrap()
                .add(&CycMatrix::shift_inverse(3))
                .unwrap()
                .scale(&alpha);
            assert_eq!(j, form);
            assert_eq!(j.det(), w(e));
            assert!(j.pow(3).unwrap().is_identity());
        }
    }

    #[test]
    fn census() {
        let cat = full_catalog().unwrap();
        assert_eq!(cat.reps.len(), 35);
        for st in SpinType::all() {
            let dims: Vec<usize> = cat.by_spin_type(st).map(|r| r.dim()).collect();
            assert_eq!(dims.iter().map(|d| d * d).sum::<usize>(), 27, "{st}");
            if st.is_non_spin() {
                assert_eq!(dims.iter().filter(|&&d| d == 1).count(), 9);
                assert_eq!(dims.iter().filter(|&&d| d == 3).count(), 2);
            } else {
                assert_eq!(dims, vec![3, 3, 3]);
            }
        }
        for r in &cat.reps {
            assert!(verify_rep(r).unwrap().passed(), "{}", r.name());
        }
    }

    fn character_set(reps: &[Representation]) -> Vec<Vec<crate::exactlin::Cyc9>> {
        let cd = ClassData::new(&Group::new(r243().unwrap()).unwrap());
        let mut v: Vec<Vec<_>> = reps
            .iter()
            .map(|r| character(r, &cd).unwrap().values().to_vec())
            .collect();
        v.sort_by_key(|row| format!("{row:?}"));
        v
    }

    #[test]
    fn mu_families_agree_across_stairways() {
        for mu in 1..3u8 {
            let via_gbar = irreps_by_spin_type(SpinType::new(0, mu as i64)).unwrap();
            let direct = irreps_partially_spin_mu_direct(mu).unwrap();
            assert_eq!(character_set(&via_gbar), character_set(&direct));
        }
    }

    #[test]
    fn cube_root_choice_only_relabels() {
        let p81 = projection_from_r243("G81").unwrap();
        let pbar = projection_from_r243("GBAR").unwrap();
        for st in SpinType::all().into_iter().filter(|s| !s.is_non_spin()) {
            let setup = classical_setup(st).unwrap();
            let reference = character_set(&irreps_by_spin_type(st).unwrap());
            for x in setup.intertwiner().unwrap().candidates {
                let fam: Vec<Representation> = (0..3)
                    .map(|r| {
                        let rep = extend_and_tensor(
                            &setup.rho,
                            &setup.action,
                            &x,
                            r,
                            Label::Other(String::new()),
                        )
                        .unwrap();
                        match (st.eps, st.mu) {
                            (_, 0) => inflate(&rep, &p81).unwrap(),
                            (0, _) => inflate(&rep, &pbar).unwrap(),
                            _ => rep,
                        }
                    })
                    .collect();
                assert_eq!(character_set(&fam), reference, "{st}");
            }
        }
    }

    #[test]
    fn intertwiner_powers() {
        for st in SpinType::all().into_iter().filter(|s| !s.is_non_spin()) {
            let setup = classical_setup(st).unwrap();
            let it = setup.intertwiner().unwrap();
            assert_eq!(it.solution_dim, 1);
            assert!(
                intertwiner_power_identities(&setup.rho, &setup.action, &it.matrix)
                    .unwrap()
                    .passed(),
                "{st}"
            );
            assert!(it.matrix.pow(3).unwrap().is_identity());
            // perturbing the solution breaks the first identity
            let off = it
                .matrix
                .add(&crate::exactlin::Cyc9Matrix::identity(3))
                .unwrap();
            assert!(
                !intertwiner_power_identities(&setup.rho, &setup.action, &off)
                    .unwrap()
                    .passed()
            );
        }
    }

    #[test]
    fn intertwiner_scalar_identities() {
        for e in 1..3i64 {
            let j = classical_setup(SpinType::new(e, 0))
                .unwrap()
                .intertwiner()
                .unwrap()
                .matrix
                .as_cyc()
                .unwrap();
            let signed = if e == 2 { -1 } else { e };
            let alpha = (&(&w(1) - &w(2)) * &CycNumber::from(-signed))
                .checked_div(&CycNumber::from(3))
                .unwrap();
            let lhs = &(&alpha.pow(3) * &CycNumber::from(3))
                * &(&CycNumber::one() + &(&w(-e) * &CycNumber::from(2)));
            assert!(lhs.is_one());
            assert!((&j * &j.conj_transpose()).is_identity());
        }
    }

    #[test]
    fn purely_spin_needs_ninth_roots() {
        for st in SpinType::all().into_iter().filter(|s| s.is_purely_spin()) {
            let fam = irreps_by_spin_type(st).unwrap();
            for r in &fam {
                let w_gen = r.schema().gen_index("n3").unwrap();
                for (g, m) in r.images().iter().enumerate() {
                    assert_eq!(m.as_cyc().is_some(), g != w_gen, "{}", r.name());
                }
            }
        }
    }

    #[test]
    fn descend_undoes_inflation() {
        let p = projection_from_r243("G81").unwrap();
        let fam = classical_setup(SpinType::new(1, 0))
            .unwrap()
            .family(|r| Label::EpsSpin { eps: 1, r })
            .unwrap();
        let up = inflate(&fam[0], &p).unwrap();
        let down = descend(&up, "G81").unwrap();
        assert_eq!(down.images(), fam[0].images());
        assert!(descend(&up, "G27").is_err());
        assert!(descend(&up, "GBAR").is_err());
    }
}
