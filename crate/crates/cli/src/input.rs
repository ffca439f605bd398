//! Structure files and the builtin fixture registry.

use serde::Deserialize;

use hopfdual_core::exact::parse_poly;
use hopfdual_core::fixtures::{poisson_fixture, symp2_rank2_module};
use hopfdual_core::hochschild::{koszul_vars, Bimodule};
use hopfdual_core::homology::FlatLeftModule;
use hopfdual_core::modules::PolyMatrix;
use hopfdual_core::hopf::{FiniteAlgebra, FiniteAlgebraSpec};
use hopfdual_core::poisson::{to_lie_rinehart, PoissonStructure};
use hopfdual_core::{CoreError, Variables};

use crate::CliError;

/// A coefficient module given by generator weights and one action matrix per generator of `L`
/// (or per variable, for bimodules). Matrix entries are polynomial strings.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleBlock {
    #[serde(default)]
    pub generators: Vec<String>,
    pub weights: Vec<i64>,
    pub actions: Vec<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum BimoduleChoice {
    Named(String),
    Custom(ModuleBlock),
}

#[derive(Clone, Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum StructureFile {
    #[serde(rename_all = "snake_case")]
    Poisson {
        name: String,
        variables: Vec<String>,
        /// `[i, j, "p_ij"]`; the entry `(j, i)` is filled in by antisymmetry.
        bracket: Vec<(usize, usize, String)>,
        degree: Option<u32>,
        module: Option<ModuleBlock>,
        window: Option<(i64, i64)>,
    },
    FiniteAlgebra(FiniteAlgebraSpec),
    #[serde(rename_all = "snake_case")]
    Hochschild {
        name: String,
        num_vars: usize,
        module: BimoduleChoice,
        window: Option<(i64, i64)>,
    },
}

/// A loaded input, ready for a command.
pub enum Input {
    Poisson { name: String, candidate: PoissonStructure, module: Option<ModuleBlock>, window: Option<(i64, i64)> },
    Algebra(FiniteAlgebra),
    Hochschild { name: String, module: Bimodule, window: Option<(i64, i64)> },
}

impl Input {
    pub fn name(&self) -> String {
        match self {
            Input::Poisson { name, .. } | Input::Hochschild { name, .. } => name.clone(),
            Input::Algebra(a) => format!("Ae-{}", a.name),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Input::Poisson { .. } => "poisson",
            Input::Algebra(_) => "finite-algebra",
            Input::Hochschild { .. } => "hochschild",
        }
    }
}

pub const BUILTINS: &[&str] = &[
    "zero2",
    "symp2",
    "symp2-rank2",
    "aff1",
    "so3",
    "quad2",
    "jfail",
    "hh0",
    "hh1",
    "hh2",
    "hh1-der",
    "hh2-der",
    "ext1",
    "ext2",
    "Ae-dual-numbers",
    "Ae-uppertriangular2",
    "VL-aff1",
    "VL-so3",
    "VL-symp2",
    "VL-quad2",
    "VL-zero2",
];

/// Reads `builtin:<name>` or a JSON structure file.
pub fn load(source: &str) -> Result<Input, CliError> {
    match source.strip_prefix("builtin:") {
        Some(name) => builtin(name),
        None => {
            let text = std::fs::read_to_string(source).map_err(|e| CliError::Input(format!("cannot read {source}: {e}")))?;
            parse_structure(&text)
        }
    }
}

pub fn parse_structure(text: &str) -> Result<Input, CliError> {
    let file: StructureFile = serde_json::from_str(text).map_err(|e| CliError::Input(format!("invalid structure file: {e}")))?;
    match file {
        StructureFile::Poisson { name, variables, bracket, degree, module, window } => {
            let names: Vec<&str> = variables.iter().map(String::as_str).collect();
            let entries: Vec<(usize, usize, &str)> = bracket.iter().map(|(i, j, p)| (*i, *j, p.as_str())).collect();
            if let Some(&(i, j, _)) = entries.iter().find(|(i, j, _)| *i >= names.len() || *j >= names.len() || i == j) {
                return Err(CliError::Input(format!("bracket entry ({i}, {j}) is not an off-diagonal index pair")));
            }
            let candidate = PoissonStructure::from_upper(&names, &entries, degree)?;
            Ok(Input::Poisson { name, candidate, module, window })
        }
        StructureFile::FiniteAlgebra(spec) => Ok(Input::Algebra(FiniteAlgebra::from_spec(&spec)?)),
        StructureFile::Hochschild { name, num_vars, module, window } => {
            Ok(Input::Hochschild { name, module: bimodule(num_vars, &module)?, window })
        }
    }
}

fn builtin(name: &str) -> Result<Input, CliError> {
    let hh = |b: Bimodule| Ok(Input::Hochschild { name: name.to_string(), module: b, window: None });
    match name {
        "Ae-dual-numbers" => return Ok(Input::Algebra(FiniteAlgebra::dual_numbers())),
        "Ae-uppertriangular2" => return Ok(Input::Algebra(FiniteAlgebra::upper_triangular())),
        "hh0" => return hh(Bimodule::base(0)),
        "hh1" => return hh(Bimodule::base(1)),
        "hh2" => return hh(Bimodule::base(2)),
        "hh1-der" => return hh(Bimodule::derivations(1)),
        "hh2-der" => return hh(Bimodule::derivations(2)),
        "ext1" => return hh(Bimodule::enveloping(1)),
        "ext2" => return hh(Bimodule::enveloping(2)),
        _ => {}
    }
    let (fixture, module) = match name {
        "symp2-rank2" => ("symp2", true),
        other => (other.strip_prefix("VL-").unwrap_or(other), false),
    };
    let f = poisson_fixture(fixture).ok_or_else(|| CliError::Input(format!("unknown builtin {name:?}; known: {}", BUILTINS.join(", "))))?;
    let candidate = f.candidate();
    let module = if module {
        let lr = to_lie_rinehart(&candidate)?;
        Some(module_block(&symp2_rank2_module(&lr)))
    } else {
        None
    };
    Ok(Input::Poisson { name: name.to_string(), candidate, module, window: None })
}

fn module_block(m: &FlatLeftModule) -> ModuleBlock {
    ModuleBlock {
        generators: m.generator_names.clone(),
        weights: m.generator_weights.clone(),
        actions: m.connections.iter().map(|mat| mat.iter().map(|row| row.iter().map(|p| p.to_string()).collect()).collect()).collect(),
    }
}

fn matrices(block: &ModuleBlock, vars: &Variables, count: usize) -> Result<Vec<PolyMatrix>, CliError> {
    let r = block.weights.len();
    if block.actions.len() != count {
        return Err(CliError::Input(format!("module block has {} action matrices, expected {count}", block.actions.len())));
    }
    block
        .actions
        .iter()
        .map(|mat| {
            if mat.len() != r || mat.iter().any(|row| row.len() != r) {
                return Err(CliError::Input(format!("action matrices must be {r}x{r}")));
            }
            mat.iter()
                .map(|row| row.iter().map(|s| parse_poly(s, vars).map_err(CliError::from)).collect())
                .collect()
        })
        .collect()
}

/// The flat left module described by `block` over the presentation of `pi`.
pub fn flat_module(pi: &PoissonStructure, block: &ModuleBlock) -> Result<FlatLeftModule, CliError> {
    let lr = to_lie_rinehart(pi)?;
    let connections = matrices(block, pi.vars(), lr.rank())?;
    let generator_names = if block.generators.is_empty() {
        (1..=block.weights.len()).map(|i| format!("g{i}")).collect()
    } else if block.generators.len() == block.weights.len() {
        block.generators.clone()
    } else {
        return Err(CliError::Input("module generators and weights differ in length".into()));
    };
    let m = FlatLeftModule { generator_names, generator_weights: block.weights.clone(), connections };
    m.validate(&lr)?;
    Ok(m)
}

fn bimodule(m: usize, choice: &BimoduleChoice) -> Result<Bimodule, CliError> {
    match choice {
        BimoduleChoice::Named(n) => match n.as_str() {
            "A" => Ok(Bimodule::base(m)),
            "Der(A)" | "Der" => Ok(Bimodule::derivations(m)),
            "A^e" | "Ae" => Ok(Bimodule::enveloping(m)),
            other => Err(CliError::Input(format!("unknown bimodule {other:?}; use A, Der(A), A^e or a module block"))),
        },
        BimoduleChoice::Custom(block) => {
            let ring = koszul_vars(m);
            let right = matrices(block, &ring, m)?;
            Ok(Bimodule::with_right_actions("M", ring, block.weights.clone(), right)?)
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        CliError::Input(e.to_string())
    }
}
