//! From a formula to a geometric countermodel.
//!
//! The stages are: a finite connected countermodel from the bounded search;
//! its untied acyclic preimage with the valuation pulled back along the
//! p-morphism; the projection of the untied cells to cylinders in `R^n`;
//! and the valuation sending each variable to the union of the images of
//! its cells. The formula is re-evaluated at every stage.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::adjacency::{
    pmorphism_violation, project, untie, AdjacencySpace, Arrangement, PMorphism,
};
use crate::algebra::{
    merge, CellSet, ContactKind, Embedding, FiniteContactAlgebra, MergeOptions, PolytopeAlgebra,
};
use crate::cylinder::CylinderPolytope;
use crate::error::{Error, GeometryError, ParseError, PipelineError};
use crate::interval::IntervalPolytope;
use crate::logic::{eval, find_countermodel, Formula, Valuation};

/// A formula whose every countermodel contains three cells in mutual
/// contact: three nonzero, pairwise disjoint, pairwise touching regions
/// are impossible. Its least countermodel is the triangle, so synthesis
/// has to untie.
pub const TRIANGLE_FORMULA: &str =
    "p != 0 & q != 0 & r != 0 & p.q == 0 & p.r == 0 & q.r == 0 & C(p,q) & C(q,r) & C(p,r) => F";

/// Truth value of the formula at each stage; all `false` for a valid
/// certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StageVerdicts {
    pub discrete: bool,
    pub untied: bool,
    pub geometric: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountermodelCertificate {
    pub formula: Formula,
    pub discrete_space: AdjacencySpace,
    pub discrete_valuation: Valuation<CellSet>,
    pub untied_space: AdjacencySpace,
    /// From the untied cells onto the discrete cells.
    pub morphism: PMorphism,
    pub untied_valuation: Valuation<CellSet>,
    pub arrangement: Arrangement,
    pub dim: usize,
    /// Image of each untied cell.
    pub cell_images: Vec<CylinderPolytope>,
    pub geometric_valuation: Valuation<CylinderPolytope>,
    pub verdicts: StageVerdicts,
}

fn stage_failed(
    stage: &'static str,
    identity: &'static str,
    detail: impl Into<String>,
) -> PipelineError {
    PipelineError::StageFailed {
        stage,
        identity,
        detail: detail.into(),
    }
}

/// `x ∈ v'(p)` iff `f(x) ∈ v(p)`.
pub fn pull_back(f: &PMorphism, v: &Valuation<CellSet>) -> Valuation<CellSet> {
    v.iter()
        .map(|(k, set)| {
            let cells = (0..f.map().len()).filter(|&x| set.contains(f.apply(x)));
            (k.clone(), CellSet::from_cells(cells))
        })
        .collect()
}

fn discrete_truth(
    phi: &Formula,
    space: &AdjacencySpace,
    v: &Valuation<CellSet>,
) -> Result<bool, Error> {
    let alg = FiniteContactAlgebra::induced(space)?;
    Ok(eval(phi, &alg, v)?)
}

fn geometric_truth(
    phi: &Formula,
    dim: usize,
    v: &Valuation<CylinderPolytope>,
) -> Result<bool, Error> {
    if v.values().any(|c| c.dim() != dim) {
        return Err(GeometryError::DimensionMismatch {
            expected: dim,
            found: v.values().find(|c| c.dim() != dim).map_or(0, |c| c.dim()),
        }
        .into());
    }
    Ok(eval(
        phi,
        &PolytopeAlgebra::cylinder(dim, ContactKind::Strong),
        v,
    )?)
}

fn empty_cylinder(dim: usize) -> Result<CylinderPolytope, GeometryError> {
    CylinderPolytope::lift(IntervalPolytope::empty(), dim)
}

/// Searches for a countermodel with at most `max_cells` cells and carries it
/// to cylinders in `R^dim`. `Ok(None)` when the search finds nothing.
pub fn synthesize(
    phi: &Formula,
    max_cells: usize,
    dim: usize,
) -> Result<Option<CountermodelCertificate>, Error> {
    if dim == 0 {
        return Err(GeometryError::ZeroDimension.into());
    }
    let Some(cm) = find_countermodel(phi, max_cells) else {
        return Ok(None);
    };
    let cert = from_countermodel(phi, &cm.space, &cm.valuation, dim)?;
    Ok(Some(cert))
}

/// Carries a given finite countermodel (connected, falsifying `phi`)
/// through untying, projection and merging.
pub fn from_countermodel(
    phi: &Formula,
    space: &AdjacencySpace,
    valuation: &Valuation<CellSet>,
    dim: usize,
) -> Result<CountermodelCertificate, Error> {
    if discrete_truth(phi, space, valuation)? {
        return Err(stage_failed(
            "discrete",
            "countermodel",
            "formula holds under the valuation",
        )
        .into());
    }

    let untying = untie(space)?;
    if let Some(why) = pmorphism_violation(&untying.map, &untying.space, space) {
        return Err(stage_failed("untied", "p-morphism", why).into());
    }
    if !untying.space.is_tree() {
        return Err(
            stage_failed("untied", "acyclic and connected", untying.space.to_string()).into(),
        );
    }
    let untied_valuation = pull_back(&untying.map, valuation);
    if discrete_truth(phi, &untying.space, &untied_valuation)? {
        return Err(stage_failed(
            "untied",
            "truth preserved by p-morphic preimages",
            "formula holds",
        )
        .into());
    }

    let numeration = untying.space.numeration(0)?;
    let arrangement = untying.space.arrangement(&numeration)?;
    let cell_images = project(&untying.space, &arrangement, dim)?;
    let (embedding, report) = merge(
        &untying.space,
        cell_images.clone(),
        empty_cylinder(dim)?,
        MergeOptions::default(),
    )?;
    if !report.passed() {
        return Err(
            stage_failed("geometric", "union map is an embedding", report.to_string()).into(),
        );
    }
    let geometric_valuation: Valuation<CylinderPolytope> = untied_valuation
        .iter()
        .map(|(k, set)| (k.clone(), embedding.image(*set)))
        .collect();
    if geometric_truth(phi, dim, &geometric_valuation)? {
        return Err(stage_failed(
            "geometric",
            "truth preserved by subalgebras",
            "formula holds",
        )
        .into());
    }

    Ok(CountermodelCertificate {
        formula: phi.clone(),
        discrete_space: space.clone(),
        discrete_valuation: valuation.clone(),
        untied_space: untying.space,
        morphism: untying.map,
        untied_valuation,
        arrangement,
        dim,
        cell_images,
        geometric_valuation,
        verdicts: StageVerdicts {
            discrete: false,
            untied: false,
            geometric: false,
        },
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    /// Why the check failed; `None` when it passed.
    pub failure: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.failure.is_none())
    }

    pub fn get(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match &c.failure {
                None => writeln!(f, "{} PASS", c.name)?,
                Some(w) => writeln!(f, "{} FAIL {w}", c.name)?,
            }
        }
        Ok(())
    }
}

/// Re-runs every stage check of a certificate from its stored data.
pub fn verify(cert: &CountermodelCertificate) -> VerifyReport {
    let mut checks = Vec::new();
    let mut push =
        |name: &'static str, failure: Option<String>| checks.push(CheckResult { name, failure });
    let falsity = |stage: Result<bool, Error>, recorded: bool| match stage {
        Ok(false) if !recorded => None,
        Ok(false) => Some("recorded verdict is true".to_string()),
        Ok(true) => Some("formula holds".to_string()),
        Err(e) => Some(e.to_string()),
    };

    push(
        "discrete-false",
        falsity(
            discrete_truth(
                &cert.formula,
                &cert.discrete_space,
                &cert.discrete_valuation,
            ),
            cert.verdicts.discrete,
        ),
    );
    push(
        "untied-tree",
        (!cert.untied_space.is_tree()).then(|| "untied space is not a tree".to_string()),
    );
    push(
        "p-morphism",
        pmorphism_violation(&cert.morphism, &cert.untied_space, &cert.discrete_space),
    );
    let pulled_ok = cert.morphism.map().len() == cert.untied_space.len()
        && cert
            .morphism
            .map()
            .iter()
            .all(|&c| c < cert.discrete_space.len());
    push(
        "pull-back",
        if !pulled_ok {
            Some("map does not fit the spaces".into())
        } else {
            let expected = pull_back(&cert.morphism, &cert.discrete_valuation);
            expected
                .iter()
                .find(|(k, set)| cert.untied_valuation.get(*k) != Some(set))
                .map(|(k, set)| format!("{k}: expected {set}"))
                .or_else(|| {
                    (cert.untied_valuation.len() != expected.len())
                        .then(|| "extra variables".to_string())
                })
        },
    );
    push(
        "untied-false",
        falsity(
            discrete_truth(&cert.formula, &cert.untied_space, &cert.untied_valuation),
            cert.verdicts.untied,
        ),
    );
    push(
        "arrangement",
        cert.arrangement
            .validate(&cert.untied_space)
            .err()
            .map(|e| e.to_string()),
    );

    let images_fit = cert.cell_images.len() == cert.untied_space.len()
        && cert.cell_images.iter().all(|c| c.dim() == cert.dim);
    match (images_fit, empty_cylinder(cert.dim)) {
        (true, Ok(zero)) => {
            match merge(
                &cert.untied_space,
                cert.cell_images.clone(),
                zero.clone(),
                MergeOptions::default(),
            ) {
                Ok((_, report)) => {
                    for c in report.checks {
                        let name = match c.name {
                            "injective" => "merge-injective",
                            "bounds" => "merge-bounds",
                            "complement" => "merge-complement",
                            "join" => "merge-join",
                            "contact-SC" => "merge-contact-SC",
                            _ => "merge-contact-C",
                        };
                        push(name, c.witness);
                    }
                }
                Err(e) => push("merge", Some(e.to_string())),
            }
            let emb = Embedding::new(cert.cell_images.clone(), zero);
            let mismatch = cert
                .untied_valuation
                .iter()
                .find(|(k, set)| cert.geometric_valuation.get(*k) != Some(&emb.image(**set)))
                .map(|(k, _)| format!("{k} is not the union of its cells' images"));
            push(
                "geometric-valuation",
                mismatch.or_else(|| {
                    (cert.geometric_valuation.len() != cert.untied_valuation.len())
                        .then(|| "extra variables".to_string())
                }),
            );
        }
        _ => push(
            "merge",
            Some("cell images do not fit the untied space".into()),
        ),
    }
    push(
        "geometric-false",
        falsity(
            geometric_truth(&cert.formula, cert.dim, &cert.geometric_valuation),
            cert.verdicts.geometric,
        ),
    );
    VerifyReport { checks }
}

// Text form: one `key=value` per line, in this order. Cell sets are
// bitmasks over cell indices, the morphism and arrangement are lists of
// cell indices.

impl fmt::Display for CountermodelCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let indices = |xs: &[usize]| {
            xs.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        writeln!(f, "certificate=1")?;
        writeln!(f, "formula={}", self.formula)?;
        writeln!(f, "dim={}", self.dim)?;
        writeln!(f, "discrete.space={}", self.discrete_space)?;
        for (k, v) in &self.discrete_valuation {
            writeln!(f, "discrete.value.{k}={}", v.0)?;
        }
        writeln!(f, "untied.space={}", self.untied_space)?;
        writeln!(f, "untied.map={}", indices(self.morphism.map()))?;
        for (k, v) in &self.untied_valuation {
            writeln!(f, "untied.value.{k}={}", v.0)?;
        }
        writeln!(f, "arrangement={}", indices(self.arrangement.seq()))?;
        for (cell, img) in self.cell_images.iter().enumerate() {
            writeln!(f, "image.{}={img}", self.untied_space.name(cell))?;
        }
        for (k, v) in &self.geometric_valuation {
            writeln!(f, "geometric.value.{k}={v}")?;
        }
        writeln!(f, "verdict.discrete={}", self.verdicts.discrete)?;
        writeln!(f, "verdict.untied={}", self.verdicts.untied)?;
        writeln!(f, "verdict.geometric={}", self.verdicts.geometric)
    }
}

impl CountermodelCertificate {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut fields: Vec<(usize, &str, &str)> = Vec::new();
        let mut offset = 0;
        for line in text.split('\n') {
            let trimmed = line.trim();
            if !trimmed.is_empty() && !trimmed.starts_with('#') {
                let lead = line.len() - line.trim_start().len();
                let (key, value) = trimmed
                    .split_once('=')
                    .ok_or_else(|| ParseError::new(offset + lead, "expected `key=value`"))?;
                let value_at = offset + lead + key.len() + 1;
                fields.push((value_at, key.trim(), value.trim()));
            }
            offset += line.len() + 1;
        }
        let end = text.len();
        let single = |key: &str| -> Result<(usize, &str), ParseError> {
            let mut hits = fields.iter().filter(|(_, k, _)| *k == key);
            let first = hits
                .next()
                .ok_or_else(|| ParseError::new(end, format!("missing `{key}`")))?;
            if let Some(dup) = hits.next() {
                return Err(ParseError::new(dup.0, format!("duplicate `{key}`")));
            }
            Ok((first.0, first.2))
        };
        let with_prefix = |prefix: &str| -> Vec<(usize, String, &str)> {
            fields
                .iter()
                .filter_map(|(at, k, v)| {
                    k.strip_prefix(prefix)
                        .map(|name| (*at, name.to_string(), *v))
                })
                .collect()
        };
        let located = |at: usize| move |e: ParseError| ParseError::new(at + e.offset, e.message);
        let number = |at: usize, s: &str| -> Result<usize, ParseError> {
            s.parse()
                .map_err(|_| ParseError::new(at, "expected a non-negative integer"))
        };
        let indices = |at: usize, s: &str| -> Result<Vec<usize>, ParseError> {
            s.split_whitespace().map(|w| number(at, w)).collect()
        };
        let boolean = |key: &str| -> Result<bool, ParseError> {
            let (at, v) = single(key)?;
            v.parse()
                .map_err(|_| ParseError::new(at, "expected `true` or `false`"))
        };
        let cellsets = |prefix: &str| -> Result<Valuation<CellSet>, ParseError> {
            with_prefix(prefix)
                .into_iter()
                .map(|(at, k, v)| {
                    v.parse::<u128>()
                        .map(|m| (k, CellSet(m)))
                        .map_err(|_| ParseError::new(at, "expected a cell bitmask"))
                })
                .collect()
        };

        let (at, version) = single("certificate")?;
        if version != "1" {
            return Err(ParseError::new(at, "unsupported certificate version"));
        }
        let (at, formula) = single("formula")?;
        let formula = Formula::from_str(formula).map_err(located(at))?;
        let (at, dim) = single("dim")?;
        let dim = number(at, dim)?;
        let (at, discrete) = single("discrete.space")?;
        let discrete_space = AdjacencySpace::parse(discrete).map_err(located(at))?;
        let (at, untied) = single("untied.space")?;
        let untied_space = AdjacencySpace::parse(untied).map_err(located(at))?;
        let (at, map) = single("untied.map")?;
        let morphism = PMorphism::new(indices(at, map)?);
        let (at, arr) = single("arrangement")?;
        let arrangement = Arrangement::new(indices(at, arr)?);

        let mut images: BTreeMap<usize, CylinderPolytope> = BTreeMap::new();
        for (at, cell, v) in with_prefix("image.") {
            let idx = untied_space
                .index_of(&cell)
                .ok_or_else(|| ParseError::new(at, format!("unknown cell `{cell}`")))?;
            images.insert(idx, CylinderPolytope::parse(v).map_err(located(at))?);
        }
        if images.len() != untied_space.len() {
            return Err(ParseError::new(
                end,
                "one `image.<cell>` line per untied cell is required",
            ));
        }
        let geometric_valuation = with_prefix("geometric.value.")
            .into_iter()
            .map(|(at, k, v)| {
                CylinderPolytope::parse(v)
                    .map(|c| (k, c))
                    .map_err(located(at))
            })
            .collect::<Result<_, _>>()?;

        Ok(CountermodelCertificate {
            formula,
            discrete_space,
            discrete_valuation: cellsets("discrete.value.")?,
            untied_space,
            morphism,
            untied_valuation: cellsets("untied.value.")?,
            arrangement,
            dim,
            cell_images: images.into_values().collect(),
            geometric_valuation,
            verdicts: StageVerdicts {
                discrete: boolean("verdict.discrete")?,
                untied: boolean("verdict.untied")?,
                geometric: boolean("verdict.geometric")?,
            },
        })
    }
}

impl FromStr for CountermodelCertificate {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CountermodelCertificate::parse(s)
    }
}
