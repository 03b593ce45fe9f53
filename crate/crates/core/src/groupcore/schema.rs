use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};

use super::GroupError;

/// Upper bound on the number of polycyclic generators of any schema.
pub const MAX_GENS: usize = 6;

/// Every generator has relative order 3.
pub const REL_ORDER: u8 = 3;

const COLLECTION_STEP_LIMIT: usize = 200_000;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SchemaId(u64);

/// Which factor of the multiplier character a central generator carries.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum MultiplierSlot {
    /// Scaled by ω^ε (the z₁₂ direction).
    Eps,
    /// Scaled by ω^μ (the z₂₃ direction).
    Mu,
}

/// A normal-form exponent vector over a schema.
///
/// Ordering is lexicographic on the exponent vector, which is the order used
/// for class representatives and table columns.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    exps: [u8; MAX_GENS],
    len: u8,
    schema: SchemaId,
}

impl Element {
    pub fn exponents(&self) -> &[u8] {
        &self.exps[..self.len as usize]
    }

    pub fn exponent(&self, gen: usize) -> u8 {
        self.exps[gen]
    }

    pub fn is_identity(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn schema_id(&self) -> SchemaId {
        self.schema
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exponents())
    }
}

/// A power-commutator presentation with every relative order equal to 3.
///
/// Conjugation rules are stored in φ-form: `conj[j][i]` is the normal form
/// of g_j g_i g_j⁻¹ for j > i. Missing rules mean the generators commute.
#[derive(Clone, Debug)]
pub struct Schema {
    name: String,
    id: SchemaId,
    generators: Vec<String>,
    central: Vec<bool>,
    power: Vec<[u8; MAX_GENS]>,
    conj: Vec<Vec<Option<[u8; MAX_GENS]>>>,
    multiplier: Vec<(usize, MultiplierSlot)>,
}

/// Incremental construction of a [`Schema`]; words are given in the element
/// text format (`"z12^1 n1^1 n2^2"`, `"1"` for the identity).
pub struct SchemaBuilder {
    name: String,
    generators: Vec<String>,
    central: Vec<bool>,
    power: Vec<(String, String)>,
    conj: Vec<(String, String, String)>,
    multiplier: Vec<(String, MultiplierSlot)>,
}

impl SchemaBuilder {
    pub fn new(name: impl Into<String>) -> Self {
        SchemaBuilder {
            name: name.into(),
            generators: Vec::new(),
            central: Vec::new(),
            power: Vec::new(),
            conj: Vec::new(),
            multiplier: Vec::new(),
        }
    }

    pub fn generator(mut self, name: &str, central: bool) -> Self {
        self.generators.push(name.to_string());
        self.central.push(central);
        self
    }

    /// g³ = word.
    pub fn power(mut self, gen: &str, word: &str) -> Self {
        self.power.push((gen.to_string(), word.to_string()));
        self
    }

    /// g_j g_i g_j⁻¹ = word, with g_j after g_i in generator order.
    pub fn conj(mut self, gj: &str, gi: &str, word: &str) -> Self {
        self.conj
            .push((gj.to_string(), gi.to_string(), word.to_string()));
        self
    }

    pub fn multiplier(mut self, gen: &str, slot: MultiplierSlot) -> Self {
        self.multiplier.push((gen.to_string(), slot));
        self
    }

    pub fn build(self) -> Result<Schema, GroupError> {
        let n = self.generators.len();
        if n == 0 || n > MAX_GENS {
            return Err(GroupError::InvalidRule(format!(
                "{} generators (1..={MAX_GENS} allowed)",
                n
            )));
        }
        let mut schema = Schema {
            name: self.name,
            id: SchemaId(0),
            generators: self.generators,
            central: self.central,
            power: vec![[0; MAX_GENS]; n],
            conj: vec![vec![None; n]; n],
            multiplier: Vec::new(),
        };
        for (i, g) in schema.generators.iter().enumerate() {
            if schema.generators[..i].contains(g) || g == "1" || g.contains(['^', ' ']) {
                return Err(GroupError::InvalidRule(format!("bad generator name {g:?}")));
            }
        }
        for (g, w) in &self.power {
            let gi = schema.gen_index(g)?;
            schema.power[gi] = schema.parse_normal_word(w)?;
        }
        for (gj, gi, w) in &self.conj {
            let (j, i) = (schema.gen_index(gj)?, schema.gen_index(gi)?);
            if j <= i {
                return Err(GroupError::InvalidRule(format!(
                    "conjugation rule {gj} on {gi} must have the conjugating generator later in order"
                )));
            }
            let word = schema.parse_normal_word(w)?;
            let mut unit = [0; MAX_GENS];
            unit[i] = 1;
            if (schema.central[i] || schema.central[j]) && word != unit {
                return Err(GroupError::InvalidRule(format!(
                    "{gj} or {gi} is central, so {gj} must fix {gi}"
                )));
            }
            schema.conj[j][i] = Some(word);
        }
        for (g, slot) in &self.multiplier {
            let gi = schema.gen_index(g)?;
            if !schema.central[gi] {
                return Err(GroupError::InvalidRule(format!(
                    "multiplier generator {g} is not central"
                )));
            }
            schema.multiplier.push((gi, *slot));
        }
        schema.id = schema.compute_id();
        Ok(schema)
    }
}

impl Schema {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn id(&self) -> SchemaId {
        self.id
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn is_central(&self, gen: usize) -> bool {
        self.central[gen]
    }

    pub fn multiplier(&self) -> &[(usize, MultiplierSlot)] {
        &self.multiplier
    }

    pub fn gen_index(&self, name: &str) -> Result<usize, GroupError> {
        self.generators
            .iter()
            .position(|g| g == name)
            .ok_or_else(|| GroupError::UnknownGenerator(name.to_string()))
    }

    /// Normal form of g³.
    pub fn power_word(&self, gen: usize) -> Element {
        self.wrap(self.power[gen])
    }

    /// Normal form of g_j g_i g_j⁻¹ (j > i); the identity rule g_i when none
    /// is declared.
    pub fn conj_word(&self, j: usize, i: usize) -> Element {
        match self.conj.get(j).and_then(|r| r[i]) {
            Some(w) => self.wrap(w),
            None => self.generator(i),
        }
    }

    /// Whether `conj[j][i]` was declared explicitly.
    pub fn has_conj_rule(&self, j: usize, i: usize) -> bool {
        self.conj[j][i].is_some()
    }

    pub fn identity(&self) -> Element {
        self.wrap([0; MAX_GENS])
    }

    pub fn generator(&self, gen: usize) -> Element {
        let mut e = [0; MAX_GENS];
        e[gen] = 1;
        self.wrap(e)
    }

    /// Element with the given exponents, reduced mod 3. Fails on a length
    /// mismatch.
    pub fn element(&self, exps: &[u8]) -> Result<Element, GroupError> {
        if exps.len() != self.rank() {
            return Err(GroupError::BadWord(format!(
                "{exps:?} has {} exponents, {} expects {}",
                exps.len(),
                self.name,
                self.rank()
            )));
        }
        let mut e = [0; MAX_GENS];
        for (slot, &x) in e.iter_mut().zip(exps) {
            *slot = x % REL_ORDER;
        }
        Ok(self.wrap(e))
    }

    pub(crate) fn wrap(&self, exps: [u8; MAX_GENS]) -> Element {
        Element {
            exps,
            len: self.rank() as u8,
            schema: self.id,
        }
    }

    fn check(&self, g: &Element) -> Result<(), GroupError> {
        if g.schema != self.id {
            return Err(GroupError::SchemaMismatch {
                expected: self.name.clone(),
            });
        }
        Ok(())
    }

    /// Normal-form product by collection from the left.
    pub fn multiply(&self, g: &Element, h: &Element) -> Result<Element, GroupError> {
        self.check(g)?;
        self.check(h)?;
        let mut exps = g.exps;
        let mut stack = Vec::with_capacity(32);
        push_word(&mut stack, &h.exps, self.rank());
        self.collect(&mut exps, &mut stack)?;
        Ok(self.wrap(exps))
    }

    /// Multiply a normal form on the right by the letters on `stack` (the
    /// next letter to absorb is on top).
    fn collect(&self, exps: &mut [u8; MAX_GENS], stack: &mut Vec<u8>) -> Result<(), GroupError> {
        let n = self.rank();
        let mut steps = 0;
        while let Some(k) = stack.pop() {
            steps += 1;
            if steps > COLLECTION_STEP_LIMIT {
                return Err(GroupError::CollectionOverflow(self.name.clone()));
            }
            let k = k as usize;
            let blocker = if self.central[k] {
                None
            } else {
                (k + 1..n).rev().find(|&j| !self.central[j] && exps[j] != 0)
            };
            match blocker {
                None => {
                    exps[k] += 1;
                    if exps[k] == REL_ORDER {
                        exps[k] = 0;
                        push_word(stack, &self.power[k], n);
                    }
                }
                Some(j) => {
                    // ... g_j · g_k = ... φ(g_j)(g_k) · g_j
                    exps[j] -= 1;
                    stack.push(j as u8);
                    match &self.conj[j][k] {
                        Some(w) => push_word(stack, w, n),
                        None => stack.push(k as u8),
                    }
                }
            }
        }
        Ok(())
    }

    pub fn power(&self, g: &Element, e: u32) -> Result<Element, GroupError> {
        self.check(g)?;
        let mut acc = self.identity();
        for _ in 0..e {
            acc = self.multiply(&acc, g)?;
        }
        Ok(acc)
    }

    /// Order of `g`; always divides 9 for the groups in this crate.
    pub fn element_order(&self, g: &Element) -> Result<u32, GroupError> {
        self.check(g)?;
        let mut acc = *g;
        let mut k = 1;
        while !acc.is_identity() {
            acc = self.multiply(&acc, g)?;
            k += 1;
            if k > 729 {
                return Err(GroupError::CollectionOverflow(self.name.clone()));
            }
        }
        Ok(k)
    }

    pub fn inverse(&self, g: &Element) -> Result<Element, GroupError> {
        let o = self.element_order(g)?;
        self.power(g, o - 1)
    }

    /// [g, h] = g h g⁻¹ h⁻¹.
    pub fn commutator(&self, g: &Element, h: &Element) -> Result<Element, GroupError> {
        let gh = self.multiply(g, h)?;
        let ghg = self.multiply(&gh, &self.inverse(g)?)?;
        self.multiply(&ghg, &self.inverse(h)?)
    }

    /// h g h⁻¹ = φ(h) g.
    pub fn conjugate(&self, g: &Element, h: &Element) -> Result<Element, GroupError> {
        let hg = self.multiply(h, g)?;
        self.multiply(&hg, &self.inverse(h)?)
    }

    /// Text form: `"z12^1 n1^1 n2^2"`, identity `"1"`.
    pub fn format_element(&self, g: &Element) -> String {
        let parts: Vec<String> = g
            .exponents()
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(i, e)| format!("{}^{}", self.generators[i], e))
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join(" ")
        }
    }

    /// Parse the strict normal-form text produced by [`Schema::format_element`].
    pub fn parse_element(&self, s: &str) -> Result<Element, GroupError> {
        Ok(self.wrap(self.parse_normal_word(s)?))
    }

    fn parse_normal_word(&self, s: &str) -> Result<[u8; MAX_GENS], GroupError> {
        let bad = || GroupError::BadWord(s.to_string());
        let mut exps = [0; MAX_GENS];
        let s = s.trim();
        if s == "1" {
            return Ok(exps);
        }
        let mut last: Option<usize> = None;
        for factor in s.split_whitespace() {
            let (g, e) = factor.split_once('^').ok_or_else(bad)?;
            let gi = self.gen_index(g)?;
            let e: u8 = e.parse().map_err(|_| bad())?;
            if e == 0 || e >= REL_ORDER || last.is_some_and(|l| l >= gi) {
                return Err(bad());
            }
            exps[gi] = e;
            last = Some(gi);
        }
        if last.is_none() {
            return Err(bad());
        }
        Ok(exps)
    }

    /// Evaluate a free word such as `"xi1 zeta^2"` or `"n2^-1 n1"`: factors in
    /// any order, any integer exponents (a bare generator means exponent 1).
    pub fn parse_word(&self, s: &str) -> Result<Element, GroupError> {
        let bad = || GroupError::BadWord(s.to_string());
        let mut acc = self.identity();
        let s = s.trim();
        if s == "1" {
            return Ok(acc);
        }
        for factor in s.split_whitespace() {
            let (g, e) = match factor.split_once('^') {
                Some((g, e)) => (g, e.parse::<i32>().map_err(|_| bad())?),
                None => (factor, 1),
            };
            let mut base = self.generator(self.gen_index(g)?);
            if e < 0 {
                base = self.inverse(&base)?;
            }
            acc = self.multiply(&acc, &self.power(&base, e.unsigned_abs())?)?;
        }
        Ok(acc)
    }

    /// Restrict to a subset of generators whose rules only mention the subset.
    /// The result keeps the relative generator order and multiplier marks.
    pub fn subschema(&self, name: &str, gens: &[&str]) -> Result<Schema, GroupError> {
        let mut keep: Vec<usize> = gens
            .iter()
            .map(|g| self.gen_index(g))
            .collect::<Result<_, _>>()?;
        keep.sort_unstable();
        keep.dedup();
        let closed = |w: &[u8; MAX_GENS]| (0..self.rank()).all(|g| w[g] == 0 || keep.contains(&g));
        let mut b = SchemaBuilder::new(name);
        for &g in &keep {
            b = b.generator(&self.generators[g], self.central[g]);
        }
        for &g in &keep {
            if !closed(&self.power[g]) {
                return Err(GroupError::InvalidRule(format!(
                    "power rule of {} leaves the subset",
                    self.generators[g]
                )));
            }
            b = b.power(&self.generators[g], &self.format_subword(&self.power[g]));
        }
        for &j in &keep {
            for &i in &keep {
                if let Some(w) = self.conj[j][i] {
                    if !closed(&w) {
                        return Err(GroupError::InvalidRule(format!(
                            "conjugation rule {} on {} leaves the subset",
                            self.generators[j], self.generators[i]
                        )));
                    }
                    b = b.conj(
                        &self.generators[j],
                        &self.generators[i],
                        &self.format_subword(&w),
                    );
                }
            }
        }
        for &(g, slot) in &self.multiplier {
            if keep.contains(&g) {
                b = b.multiplier(&self.generators[g], slot);
            }
        }
        b.build()
    }

    /// The presentation of the quotient by central generators of trivial cube:
    /// those generators are deleted from every rule.
    pub fn quotient_by_central(&self, name: &str, gens: &[&str]) -> Result<Schema, GroupError> {
        let drop: Vec<usize> = gens
            .iter()
            .map(|g| self.gen_index(g))
            .collect::<Result<_, _>>()?;
        for &g in &drop {
            if !self.central[g] || self.power[g] != [0; MAX_GENS] {
                return Err(GroupError::InvalidRule(format!(
                    "{} must be central with trivial cube to be factored out",
                    self.generators[g]
                )));
            }
        }
        let strip = |w: &[u8; MAX_GENS]| {
            let mut w = *w;
            for &g in &drop {
                w[g] = 0;
            }
            w
        };
        let keep: Vec<usize> = (0..self.rank()).filter(|g| !drop.contains(g)).collect();
        let mut b = SchemaBuilder::new(name);
        for &g in &keep {
            b = b.generator(&self.generators[g], self.central[g]);
        }
        for &g in &keep {
            b = b.power(
                &self.generators[g],
                &self.format_subword(&strip(&self.power[g])),
            );
            for &j in &keep {
                if let Some(w) = self.conj[j][g] {
                    let w = strip(&w);
                    let mut unit = [0; MAX_GENS];
                    unit[g] = 1;
                    if w != unit {
                        b = b.conj(
                            &self.generators[j],
                            &self.generators[g],
                            &self.format_subword(&w),
                        );
                    }
                }
            }
        }
        for &(g, slot) in &self.multiplier {
            if keep.contains(&g) {
                b = b.multiplier(&self.generators[g], slot);
            }
        }
        b.build()
    }

    fn format_subword(&self, w: &[u8; MAX_GENS]) -> String {
        self.format_element(&self.wrap(*w))
    }

    fn compute_id(&self) -> SchemaId {
        let mut h = DefaultHasher::new();
        self.name.hash(&mut h);
        self.generators.hash(&mut h);
        self.central.hash(&mut h);
        self.power.hash(&mut h);
        self.conj.hash(&mut h);
        SchemaId(h.finish())
    }

    /// Every defining relation, as (description, lhs word, rhs normal form).
    /// The lhs is a sequence of (generator, exponent) factors; a negative
    /// exponent denotes an inverse.
    pub fn relations(&self) -> Vec<Relation> {
        let n = self.rank();
        let mut out = Vec::new();
        for g in 0..n {
            out.push(Relation {
                text: format!(
                    "{}^3 = {}",
                    self.generators[g],
                    self.format_subword(&self.power[g])
                ),
                lhs: vec![(g, 3)],
                rhs: self.power_word(g),
            });
        }
        for j in 0..n {
            for i in 0..j {
                let rhs = self.conj_word(j, i);
                out.push(Relation {
                    text: format!(
                        "{gj} {gi} {gj}^-1 = {}",
                        self.format_element(&rhs),
                        gj = self.generators[j],
                        gi = self.generators[i]
                    ),
                    lhs: vec![(j, 1), (i, 1), (j, -1)],
                    rhs,
                });
            }
        }
        out
    }
}

/// One defining relation `lhs = rhs` of a schema.
#[derive(Clone, Debug)]
pub struct Relation {
    pub text: String,
    pub lhs: Vec<(usize, i32)>,
    pub rhs: Element,
}

fn push_word(stack: &mut Vec<u8>, w: &[u8; MAX_GENS], n: usize) {
    for g in (0..n).rev() {
        for _ in 0..w[g] {
            stack.push(g as u8);
        }
    }
}
