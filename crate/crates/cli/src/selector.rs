use dunkl_susy::potentials::PotentialSpec;
use dunkl_susy::{ClassicalKind, DunklSusyFamily, Error, MonicSymmetricSystem, Result, SymmetricClassical};
use serde_json::{json, Map, Value};

/// Parameter flags shared by every subcommand. Unset potential parameters
/// fall back to the catalog entry for that potential.
#[derive(Debug, Clone, clap::Args)]
pub struct Params {
    /// Scale of the Gaussian weights and oscillator potentials.
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub s: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: Option<f64>,
    /// Second Jacobi parameter (defaults to alpha).
    #[arg(long, allow_negative_numbers = true)]
    pub beta: Option<f64>,
    #[arg(long = "A", allow_negative_numbers = true)]
    pub a: Option<f64>,
    #[arg(long = "B", allow_negative_numbers = true)]
    pub b: Option<f64>,
    /// Angular momentum of the 3d oscillator.
    #[arg(long, allow_negative_numbers = true)]
    pub l: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Selector {
    Susy(SymmetricClassical),
    Classical(ClassicalKind),
    Potential(PotentialSpec),
}

pub struct Entry {
    pub name: &'static str,
    pub kind: &'static str,
    pub params: &'static str,
    pub about: &'static str,
}

pub const ENTRIES: [Entry; 12] = [
    Entry { name: "hermite-susy", kind: "susy", params: "s", about: "Q_n over the Gaussian weight exp(-s²x²)" },
    Entry { name: "laguerre-susy", kind: "susy", params: "s alpha", about: "Q_n over exp(-s²x²)|sx|^(2alpha+1)" },
    Entry { name: "jacobi-susy", kind: "susy", params: "alpha", about: "Q_n over (1-x²)^alpha on [-1, 1]" },
    Entry { name: "hermite", kind: "classical", params: "", about: "Hermite H_n" },
    Entry { name: "laguerre", kind: "classical", params: "alpha", about: "Laguerre L_n^(alpha)" },
    Entry { name: "jacobi", kind: "classical", params: "alpha beta", about: "Jacobi P_n^(alpha,beta)" },
    Entry { name: "shifted-oscillator", kind: "potential", params: "s", about: "shifted oscillator, v = s²x" },
    Entry { name: "scarf2", kind: "potential", params: "A alpha", about: "Scarf II (hyperbolic), v = A tanh(alpha x)" },
    Entry { name: "scarf1", kind: "potential", params: "A alpha", about: "Scarf I (trigonometric), v = A tan(alpha x)" },
    Entry { name: "3d-oscillator", kind: "potential", params: "s l", about: "3d oscillator, v = s²x - (l+1)/x" },
    Entry {
        name: "gen-poschl-teller",
        kind: "potential",
        params: "A B alpha",
        about: "generalized Pöschl-Teller, v = A coth(alpha x) - B cosech(alpha x)",
    },
    Entry {
        name: "poschl-teller",
        kind: "potential",
        params: "A B alpha",
        about: "Pöschl-Teller, v = A tan(alpha x) - B cot(alpha x)",
    },
];

fn unknown(name: &str) -> Error {
    let known: Vec<&str> = ENTRIES.iter().map(|e| e.name).collect();
    Error::Domain(format!("unknown family '{name}' (expected one of: {})", known.join(", ")))
}

impl Selector {
    pub fn parse(name: &str, p: &Params) -> Result<Self> {
        let alpha = p.alpha.unwrap_or(0.0);
        let sel = match name {
            "hermite-susy" => Selector::Susy(SymmetricClassical::Hermite { s: p.s }),
            "laguerre-susy" => Selector::Susy(SymmetricClassical::GeneralizedHermite { s: p.s, alpha }),
            "jacobi-susy" => Selector::Susy(SymmetricClassical::SymmetricJacobi { alpha }),
            "hermite" => Selector::Classical(ClassicalKind::Hermite),
            "laguerre" => Selector::Classical(ClassicalKind::Laguerre { alpha }),
            "jacobi" => Selector::Classical(ClassicalKind::Jacobi {
                alpha,
                beta: p.beta.unwrap_or(alpha),
            }),
            _ => {
                if !PotentialSpec::NAMES.contains(&name) {
                    return Err(unknown(name));
                }
                let default = PotentialSpec::catalog()
                    .into_iter()
                    .find(|s| s.name() == name)
                    .expect("catalog covers every name");
                return Ok(Selector::Potential(with_overrides(default, p)?));
            }
        };
        sel.validate()?;
        Ok(sel)
    }

    fn validate(&self) -> Result<()> {
        match self {
            Selector::Susy(kind) => MonicSymmetricSystem::from_classical(*kind).map(|_| ()),
            Selector::Classical(kind) => kind.validate(),
            Selector::Potential(spec) => spec.validate(),
        }
    }

    pub fn family(&self) -> Result<DunklSusyFamily> {
        match self {
            Selector::Susy(kind) => DunklSusyFamily::build(MonicSymmetricSystem::from_classical(*kind)?),
            _ => Err(Error::Unsupported(format!(
                "{} is not a Dunkl-SUSY polynomial family (use hermite-susy, laguerre-susy or jacobi-susy)",
                self.name()
            ))),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Selector::Susy(SymmetricClassical::Hermite { .. }) => "hermite-susy",
            Selector::Susy(SymmetricClassical::GeneralizedHermite { .. }) => "laguerre-susy",
            Selector::Susy(SymmetricClassical::SymmetricJacobi { .. }) => "jacobi-susy",
            Selector::Classical(ClassicalKind::Hermite) => "hermite",
            Selector::Classical(ClassicalKind::Laguerre { .. }) => "laguerre",
            Selector::Classical(ClassicalKind::Jacobi { .. }) => "jacobi",
            Selector::Potential(spec) => spec.name(),
        }
    }

    /// Resolved parameters, for the `params` block of JSON reports.
    pub fn describe(&self) -> Map<String, Value> {
        let mut m = match *self {
            Selector::Susy(SymmetricClassical::Hermite { s }) => json!({ "s": s }),
            Selector::Susy(SymmetricClassical::GeneralizedHermite { s, alpha }) => json!({ "s": s, "alpha": alpha }),
            Selector::Susy(SymmetricClassical::SymmetricJacobi { alpha }) => json!({ "alpha": alpha }),
            Selector::Classical(ClassicalKind::Hermite) => json!({}),
            Selector::Classical(ClassicalKind::Laguerre { alpha }) => json!({ "alpha": alpha }),
            Selector::Classical(ClassicalKind::Jacobi { alpha, beta }) => json!({ "alpha": alpha, "beta": beta }),
            Selector::Potential(spec) => serde_json::to_value(spec).expect("spec serializes"),
        };
        let obj = m.as_object_mut().expect("parameters form an object");
        obj.remove("name");
        let mut out = Map::new();
        out.insert("family".into(), Value::from(self.name()));
        out.append(obj);
        out
    }
}

fn with_overrides(spec: PotentialSpec, p: &Params) -> Result<PotentialSpec> {
    let spec = match spec {
        PotentialSpec::ShiftedOscillator { .. } => PotentialSpec::ShiftedOscillator { s: p.s },
        PotentialSpec::ScarfII { a, alpha } => PotentialSpec::ScarfII {
            a: p.a.unwrap_or(a),
            alpha: p.alpha.unwrap_or(alpha),
        },
        PotentialSpec::ScarfI { a, alpha } => PotentialSpec::ScarfI {
            a: p.a.unwrap_or(a),
            alpha: p.alpha.unwrap_or(alpha),
        },
        PotentialSpec::ThreeDOscillator { l, .. } => PotentialSpec::ThreeDOscillator { s: p.s, l: p.l.unwrap_or(l) },
        PotentialSpec::GenPoschlTeller { a, b, alpha } => PotentialSpec::GenPoschlTeller {
            a: p.a.unwrap_or(a),
            b: p.b.unwrap_or(b),
            alpha: p.alpha.unwrap_or(alpha),
        },
        PotentialSpec::PoschlTeller { a, b, alpha } => PotentialSpec::PoschlTeller {
            a: p.a.unwrap_or(a),
            b: p.b.unwrap_or(b),
            alpha: p.alpha.unwrap_or(alpha),
        },
    };
    spec.validate()?;
    Ok(spec)
}
