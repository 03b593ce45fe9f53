//! Named end-to-end checks, one per acceptance criterion. The CLI `verify`
//! command and the acceptance test both run these.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::exactlin::{Cyc9, CycMatrix, CycNumber, Rational};
use crate::groupcore::{
    self, verify_efficient_covering, verify_phi_automorphism, Group, GroupError, Schema,
};
use crate::mackey::{dual_group, orbit_decomposition, AbelianSubgroup};
use crate::spinrep::{
    canonical_section, classical_setup, column_orthogonality, full_catalog, induced_pi_0n,
    inner_product, restrict_to_projective, spin_character_table, verify_rep, RepError,
    Representation, SpinType,
};

#[derive(Clone, Copy, Debug)]
pub struct CheckInfo {
    pub name: &'static str,
    pub criterion: u8,
    pub summary: &'static str,
}

pub const CHECKS: [CheckInfo; 11] = [
    CheckInfo {
        name: "orders",
        criterion: 1,
        summary: "enumerated group orders",
    },
    CheckInfo {
        name: "structure",
        criterion: 2,
        summary: "center, derived subgroup and efficient covering of R243",
    },
    CheckInfo {
        name: "phi",
        criterion: 3,
        summary: "Phi is an automorphism of GSHARP for all nine (a,b)",
    },
    CheckInfo {
        name: "orbits",
        criterion: 4,
        summary: "W-orbits on the duals of X1 x X2 and Z12 x Xi1",
    },
    CheckInfo {
        name: "anchors",
        criterion: 5,
        summary: "closed-form matrices of Pi_{0,n}, P_{e,0}, P_{e,m}",
    },
    CheckInfo {
        name: "intertwiner",
        criterion: 6,
        summary: "solved intertwiner of P_{e,0} in closed form",
    },
    CheckInfo {
        name: "characters",
        criterion: 7,
        summary: "Pi_{0,n} character formula and character supports",
    },
    CheckInfo {
        name: "census",
        criterion: 8,
        summary: "IR counts and dimensions per spin type",
    },
    CheckInfo {
        name: "orthogonality",
        criterion: 9,
        summary: "Gram matrix and column orthogonality",
    },
    CheckInfo {
        name: "cocycles",
        criterion: 10,
        summary: "factor sets on G27 along the canonical section",
    },
    CheckInfo {
        name: "engine",
        criterion: 11,
        summary: "associativity and verify_rep on the catalog",
    },
];

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub criterion: u8,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, thiserror::Error)]
pub enum VerifyError {
    #[error("unknown check {0:?}")]
    UnknownCheck(String),
}

type Outcome = Result<(bool, String), RepError>;

/// Runs the checks. Schemas can be swapped out by name to inject faults;
/// the swap reaches the group-level checks (orders, structure, engine).
#[derive(Clone, Debug)]
pub struct Verifier {
    overrides: BTreeMap<String, Schema>,
    random_triples: usize,
    seed: u64,
}

impl Default for Verifier {
    fn default() -> Self {
        Verifier {
            overrides: BTreeMap::new(),
            random_triples: 1_000_000,
            seed: 0x5eed_0243,
        }
    }
}

impl Verifier {
    pub fn new() -> Self {
        Verifier::default()
    }

    /// Use `schema` wherever the catalog name `name` is looked up
    /// (`"G81_param(a,b)"` for the parameterized family).
    pub fn with_schema(mut self, name: &str, schema: Schema) -> Self {
        self.overrides.insert(name.to_string(), schema);
        self
    }

    pub fn with_random_triples(mut self, n: usize, seed: u64) -> Self {
        self.random_triples = n;
        self.seed = seed;
        self
    }

    fn schema(&self, name: &str, params: Option<(u8, u8)>) -> Result<Schema, GroupError> {
        let key = match params {
            Some((a, b)) => format!("{name}({a},{b})"),
            None => name.to_string(),
        };
        match self.overrides.get(&key) {
            Some(s) => Ok(s.clone()),
            None => groupcore::schema(name, params),
        }
    }

    /// All checks, or just the one named by `only`.
    pub fn run(&self, only: Option<&str>) -> Result<Vec<CheckResult>, VerifyError> {
        match only {
            None => Ok(CHECKS.iter().map(|c| self.run_info(c)).collect()),
            Some(name) => Ok(vec![self.run_check(name)?]),
        }
    }

    pub fn run_check(&self, name: &str) -> Result<CheckResult, VerifyError> {
        let info = CHECKS
            .iter()
            .find(|c| c.name == name)
            .ok_or_else(|| VerifyError::UnknownCheck(name.to_string()))?;
        Ok(self.run_info(info))
    }

    fn run_info(&self, info: &CheckInfo) -> CheckResult {
        let outcome = match info.name {
            "orders" => self.orders(),
            "structure" => self.structure(),
            "phi" => phi(),
            "orbits" => orbits(),
            "anchors" => anchors(),
            "intertwiner" => intertwiner(),
            "characters" => characters(),
            "census" => census(),
            "orthogonality" => orthogonality(),
            "cocycles" => cocycles(),
            "engine" => self.engine(),
            _ => unreachable!("every entry of CHECKS has a runner"),
        };
        let (passed, detail) = outcome.unwrap_or_else(|e| (false, format!("error: {e}")));
        CheckResult {
            name: info.name,
            criterion: info.criterion,
            passed,
            detail,
        }
    }

    fn orders(&self) -> Outcome {
        let mut ok = true;
        let mut parts = Vec::new();
        let mut want: Vec<(&str, Option<(u8, u8)>, usize)> = vec![
            ("G27", None, 27),
            ("G81", None, 81),
            ("GBAR", None, 81),
            ("R243", None, 243),
        ];
        for a in 0..3 {
            for b in 0..3 {
                want.push(("G81_param", Some((a, b)), 81));
            }
        }
        for (name, params, expected) in want {
            let s = self.schema(name, params)?;
            let n = Group::new(s.clone())?.order();
            ok &= n == expected;
            parts.push(format!("|{}| = {n}", s.name()));
        }
        let gs = Group::new(self.schema("GSHARP", None)?)?.order();
        parts.push(format!("|GSHARP| = {gs}"));
        Ok((ok, parts.join(", ")))
    }

    fn structure(&self) -> Outcome {
        let g = Group::new(self.schema("R243", None)?)?;
        let s = g.schema().clone();
        let gen = |n: &str| s.gen_index(n).map(|i| s.generator(i));
        let z = g.generated_by(&[gen("z12")?, gen("z23")?])?;
        let d = g.generated_by(&[gen("z12")?, gen("z23")?, gen("n2")?])?;
        let (center, derived) = (g.center(), g.derived_subgroup());
        let center_ok = center.order() == 9 && center.is_subset_of(&z) && z.is_subset_of(&center);
        let derived_ok =
            derived.order() == 27 && derived.is_subset_of(&d) && d.is_subset_of(&derived);
        let small = Group::new(self.schema("G27", None)?)?;
        let report = verify_efficient_covering(
            &g,
            &["z12", "z23"],
            &small,
            &[("n1", "x1"), ("n2", "x2"), ("n3", "x3")],
        )?;
        let mut detail = format!("|Z| = {}, |[R,R]| = {}", center.order(), derived.order());
        if let Some(f) = report.first_failure() {
            detail += &format!("; covering: {} failed ({})", f.name, f.detail);
        }
        Ok((center_ok && derived_ok && report.passed(), detail))
    }

    fn engine(&self) -> Outcome {
        let mut ok = true;
        let mut parts = Vec::new();
        let mut names: Vec<(&str, Option<(u8, u8)>)> = vec![
            ("G27", None),
            ("G81", None),
            ("GBAR", None),
            ("GSHARP", None),
            ("R243", None),
        ];
        for a in 0..3 {
            for b in 0..3 {
                names.push(("G81_param", Some((a, b))));
            }
        }
        let mut exhaustive = 0;
        for (name, params) in names {
            let g = Group::new(self.schema(name, params)?)?;
            if g.order() > 243 {
                continue;
            }
            if let Err((x, y, z)) = g.check_associativity() {
                ok = false;
                let f = |e| g.schema().format_element(e);
                parts.push(format!(
                    "{}: ({})({})({}) is not associative",
                    g.schema().name(),
                    f(&x),
                    f(&y),
                    f(&z)
                ));
            }
            exhaustive += 1;
        }
        parts.push(format!("{exhaustive} schemas exhaustive"));

        let gs = self.schema("GSHARP", None)?;
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let mut random = || -> Result<_, GroupError> {
            let e: Vec<u8> = (0..gs.rank()).map(|_| rng.gen_range(0..3)).collect();
            gs.element(&e)
        };
        let mut bad = None;
        for _ in 0..self.random_triples {
            let (x, y, z) = (random()?, random()?, random()?);
            let left = gs.multiply(&gs.multiply(&x, &y)?, &z)?;
            let right = gs.multiply(&x, &gs.multiply(&y, &z)?)?;
            if left != right {
                bad = Some((x, y, z));
                break;
            }
        }
        if let Some((x, y, z)) = bad {
            ok = false;
            let f = |e| gs.format_element(e);
            parts.push(format!(
                "GSHARP random triple ({})({})({}) fails",
                f(&x),
                f(&y),
                f(&z)
            ));
        }
        parts.push(format!("{} random GSHARP triples", self.random_triples));

        let cat = full_catalog()?;
        for r in &cat.reps {
            let report = verify_rep(r)?;
            if let Some(f) = report.first_failure() {
                ok = false;
                parts.push(format!("{}: {} ({})", r.name(), f.name, f.detail));
            }
        }
        parts.push(format!("{} catalog reps verified", cat.reps.len()));
        Ok((ok, parts.join("; ")))
    }
}

fn phi() -> Outcome {
    let mut failures = Vec::new();
    for a in 0..3 {
        for b in 0..3 {
            let report = verify_phi_automorphism(a, b)?;
            for c in report.checks.iter().filter(|c| !c.passed) {
                failures.push(format!("({a},{b}) {}: {}", c.name, c.detail));
            }
        }
    }
    let ok = failures.is_empty();
    Ok((
        ok,
        if ok {
            "9 pairs".to_string()
        } else {
            failures.join("; ")
        },
    ))
}

fn orbits() -> Outcome {
    let s = groupcore::g27()?;
    let u = AbelianSubgroup::new(&s, &[s.generator(0), s.generator(1)])?;
    let dec = orbit_decomposition(&dual_group(&u), &[s.generator(2)])?;
    let fixed = dec
        .orbits
        .iter()
        .filter(|o| o.members.len() == 1 && o.stabilizer.len() == 3 && o.rep.label()[1] == 0);
    let free = dec
        .orbits
        .iter()
        .filter(|o| o.members.len() == 3 && o.stabilizer.len() == 1 && o.rep.label()[1] != 0);
    let g27_ok = dec.orbits.len() == 5 && fixed.count() == 3 && free.count() == 2;

    let s81 = groupcore::g81()?;
    let (z12, xi1, xi2) = (s81.generator(0), s81.generator(1), s81.generator(2));
    let u0 = AbelianSubgroup::new(&s81, &[z12, xi1])?;
    let dec81 = orbit_decomposition(&dual_group(&u0), &[xi2])?;
    let mut g81_ok = true;
    for eps in 1..3u8 {
        let orbit = dec81
            .orbits
            .iter()
            .find(|o| o.members.iter().any(|m| m.label() == [eps, 0]));
        g81_ok &= orbit.is_some_and(|o| {
            o.stabilizer.len() == 1
                && o.members.len() == 3
                && o.members.iter().all(|m| m.label()[0] == eps)
        });
    }
    let detail = format!(
        "G27 orbit sizes {:?}; G81 orbit sizes {:?}",
        dec.orbits
            .iter()
            .map(|o| o.members.len())
            .collect::<Vec<_>>(),
        dec81
            .orbits
            .iter()
            .map(|o| o.members.len())
            .collect::<Vec<_>>()
    );
    Ok((g27_ok && g81_ok, detail))
}

fn w(k: i64) -> CycNumber {
    CycNumber::root_of_unity(k)
}

fn heisenberg_diag(e: i64) -> CycMatrix {
    CycMatrix::diagonal(&[w(0), w(-e), w(e)])
}

fn anchors() -> Outcome {
    let mut bad = Vec::new();
    let mut expect = |what: String, got: Option<CycMatrix>, want: CycMatrix| {
        if got.as_ref() != Some(&want) {
            bad.push(what);
        }
    };
    for n in 1..3i64 {
        let r = induced_pi_0n(n as u8)?;
        expect(
            format!("Pi_{{0,{n}}}(x3)"),
            r.image(2).as_cyc(),
            CycMatrix::shift(3),
        );
        expect(
            format!("Pi_{{0,{n}}}(x1)"),
            r.image(0).as_cyc(),
            heisenberg_diag(n),
        );
        expect(
            format!("Pi_{{0,{n}}}(x2)"),
            r.image(1).as_cyc(),
            CycMatrix::scalar(3, &w(n)),
        );
    }
    for st in SpinType::all().into_iter().filter(|s| s.eps != 0) {
        let (e, m) = (st.eps as i64, st.mu as i64);
        let rho = classical_setup(st)?.rho;
        let s = rho.schema().clone();
        let img = |g: &str| s.gen_index(g).map(|i| rho.image(i).as_cyc());
        let tag = format!("P_{{{st}}}");
        expect(
            format!("{tag}(z12)"),
            img("z12")?,
            CycMatrix::scalar(3, &w(e)),
        );
        if m == 0 {
            expect(format!("{tag}(xi1)"), img("xi1")?, heisenberg_diag(e));
            expect(format!("{tag}(xi2)"), img("xi2")?, CycMatrix::shift(3));
        } else {
            expect(
                format!("{tag}(z23)"),
                img("z23")?,
                CycMatrix::scalar(3, &w(m)),
            );
            expect(format!("{tag}(n1)"), img("n1")?, heisenberg_diag(e));
            expect(format!("{tag}(n2)"), img("n2")?, CycMatrix::shift(3));
        }
    }
    let ok = bad.is_empty();
    Ok((
        ok,
        if ok {
            "all entrywise equal".to_string()
        } else {
            format!("mismatch: {}", bad.join(", "))
        },
    ))
}

fn intertwiner() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for e in 1..3i64 {
        let setup = classical_setup(SpinType::new(e, 0))?;
        let Some(j) = setup.intertwiner()?.matrix.as_cyc() else {
            return Ok((false, format!("eps = {e}: intertwiner leaves Q(w)")));
        };
        let signed = if e == 2 { -1 } else { e };
        let alpha =
            (&CycNumber::i_sqrt3() * &CycNumber::from(-signed)).checked_div(&CycNumber::from(3))?;
        let form = CycMatrix::identity(3)
            .add(&CycMatrix::shift(3).scale(&w(-e)))?
            .add(&CycMatrix::shift_inverse(3))?
            .scale(&alpha);
        let cubic = &(&alpha.pow(3) * &CycNumber::from(3))
            * &(&CycNumber::one() + &(&w(-e) * &CycNumber::from(2)));
        let checks = [
            ("closed form", j == form),
            ("3a^3(1+2w^-e) = 1", cubic.is_one()),
            ("J^3 = I", j.pow(3)?.is_identity()),
            ("det = w^e", j.det() == w(e)),
            ("unitary", (&j * &j.conj_transpose()).is_identity()),
        ];
        for (name, pass) in checks {
            ok &= pass;
            if !pass {
                parts.push(format!("eps = {e}: {name}"));
            }
        }
        parts.push(format!("eps = {e}: alpha = {alpha}"));
    }
    Ok((ok, parts.join("; ")))
}

/// The character of `r` is nonzero exactly on the elements whose only
/// nonzero exponents sit on `central`.
fn supported_on(r: &Representation, central: &[&str]) -> Result<bool, RepError> {
    let s = r.schema();
    let keep = central
        .iter()
        .map(|c| s.gen_index(c))
        .collect::<Result<Vec<_>, _>>()?;
    for h in Group::new(s.clone())?.elements() {
        let inside = h
            .exponents()
            .iter()
            .enumerate()
            .all(|(i, &e)| e == 0 || keep.contains(&i));
        if r.character_at(h)?.is_zero() == inside {
            return Ok(false);
        }
    }
    Ok(true)
}

fn characters() -> Outcome {
    let mut bad = Vec::new();
    let g = Group::new(groupcore::g27()?)?;
    for n in 1..3u8 {
        let r = induced_pi_0n(n)?;
        for h in g.elements() {
            let b = h.exponents();
            let want = if b[0] == 0 && b[2] == 0 {
                Cyc9::from(w((b[1] * n) as i64).scale(&Rational::from_int(3)))
            } else {
                Cyc9::zero()
            };
            if r.character_at(h)? != want {
                bad.push(format!("Pi_{{0,{n}}} at {}", g.schema().format_element(h)));
            }
        }
    }
    for st in SpinType::all().into_iter().filter(|s| !s.is_non_spin()) {
        let central: &[&str] = match (st.eps, st.mu) {
            (_, 0) => &["z12"],
            (0, _) => &["z23"],
            _ => &["z12", "z23"],
        };
        if !supported_on(&classical_setup(st)?.rho, central)? {
            bad.push(format!("P_{{{st}}} support"));
        }
    }
    let ok = bad.is_empty();
    Ok((
        ok,
        if ok {
            "formula and supports hold".to_string()
        } else {
            bad.join(", ")
        },
    ))
}

fn census() -> Outcome {
    let cat = full_catalog()?;
    let classes = Group::new(groupcore::r243()?)?.conjugacy_classes().len();
    let mut ok = cat.reps.len() == 35 && classes == 35;
    let mut parts = vec![format!("{} IRs, {classes} classes", cat.reps.len())];
    let mut total = 0;
    for st in SpinType::all() {
        let mut dims: Vec<usize> = cat.by_spin_type(st).map(|r| r.dim()).collect();
        dims.sort();
        let sq: usize = dims.iter().map(|d| d * d).sum();
        total += sq;
        let want = if st.is_non_spin() {
            vec![1, 1, 1, 1, 1, 1, 1, 1, 1, 3, 3]
        } else {
            vec![3, 3, 3]
        };
        ok &= dims == want && sq == 27;
        parts.push(format!("({st}): {dims:?}"));
    }
    ok &= total == 243;
    parts.push(format!("sum dim^2 = {total}"));
    Ok((ok, parts.join("; ")))
}

fn orthogonality() -> Outcome {
    let t = spin_character_table()?;
    for (i, a) in t.rows.iter().enumerate() {
        for (j, b) in t.rows.iter().enumerate() {
            let ip = inner_product(&a.character, &b.character)?;
            if ip != Cyc9::from(i64::from(i == j)) {
                return Ok((false, format!("<{}, {}> = {ip}", a.name, b.name)));
            }
        }
    }
    if let Err((a, b)) = column_orthogonality(&t) {
        let f = |k: usize| t.classes.classes()[k].rep;
        let s = groupcore::r243()?;
        return Ok((
            false,
            format!(
                "columns {} and {}",
                s.format_element(&f(a)),
                s.format_element(&f(b))
            ),
        ));
    }
    Ok((
        true,
        format!(
            "{0}x{0} Gram matrix is the identity; columns orthogonal",
            t.rows.len()
        ),
    ))
}

fn cocycles() -> Outcome {
    let section = canonical_section()?;
    let cat = full_catalog()?;
    let mut bad = Vec::new();
    for st in SpinType::all() {
        let mut tables = Vec::new();
        for r in cat.by_spin_type(st) {
            let (_, t) = restrict_to_projective(r, &section)?;
            if t.check_cocycle_identity().is_err() {
                bad.push(format!("{}: cocycle identity", r.name()));
            }
            if st.is_non_spin() && !t.is_trivial() {
                bad.push(format!("{}: nontrivial", r.name()));
            }
            tables.push(t);
        }
        if tables.windows(2).any(|w| w[0] != w[1]) {
            bad.push(format!("({st}): cocycles differ"));
        }
    }
    let ok = bad.is_empty();
    Ok((
        ok,
        if ok {
            format!("{} IRs, 27^3 triples each", cat.reps.len())
        } else {
            bad.join(", ")
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupcore::SchemaBuilder;

    #[test]
    fn unknown_check_is_an_error() {
        assert!(matches!(
            Verifier::new().run(Some("nope")),
            Err(VerifyError::UnknownCheck(_))
        ));
    }

    #[test]
    fn corrupted_rule_is_caught_by_name() {
        // x₃ would act on x₁ by inversion, which has order 2.
        let bad = SchemaBuilder::new("G27")
            .generator("x1", false)
            .generator("x2", true)
            .generator("x3", false)
            .conj("x3", "x1", "x1^2")
            .build()
            .unwrap();
        let v = Verifier::new()
            .with_schema("G27", bad)
            .with_random_triples(10, 1);
        let r = v.run_check("engine").unwrap();
        assert!(!r.passed);
        assert!(r.detail.contains("G27"), "{}", r.detail);
        assert!(v.run_check("orders").unwrap().detail.contains("|G27|"));
    }

    #[test]
    fn light_checks_pass() {
        for name in [
            "orders",
            "structure",
            "orbits",
            "anchors",
            "intertwiner",
            "characters",
        ] {
            let r = Verifier::new().run_check(name).unwrap();
            assert!(r.passed, "{name}: {}", r.detail);
        }
    }
}
