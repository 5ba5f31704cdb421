use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use howe_core::bn::LinearCharacter;
use howe_core::howe::cuspidal::{triangular, Parity, SeriesLabel, TowerContext};
use howe_core::howe::omega::{omega_unipotent, theta_images, TableJson};
use howe_core::howe::{extremal_images, HoweConfig};
use howe_core::lusztig::full::FullJson;
use howe_core::lusztig::orbit::{default_modulus, DescriptorJson};
use howe_core::lusztig::{
    centralizer_decomposition, omega_full, parse_gl_part, transport_support, CentralizerDecomposition, CuspidalDatum,
    CuspidalPair, CuspidalSupport, GlCuspidal, SemisimpleDescriptor,
};
use howe_core::partition::{Bipartition, Partition};
use howe_core::verify::{run_suite, PropertyReport};
use howe_core::{Error, Result};

#[derive(Parser, Debug)]
#[command(
    name = "howe",
    version,
    about = "Unipotent Howe correspondence for finite unitary dual pairs"
)]
struct Cli {
    /// Emit JSON.
    #[arg(long, global = true, conflicts_with = "text")]
    json: bool,
    /// Emit aligned text (the default).
    #[arg(long, global = true)]
    text: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Multiplicity table of Omega_{m,m',k}.
    Omega(SeriesArgs),
    /// Theta images of one member of the series.
    Theta {
        #[command(flatten)]
        series: SeriesArgs,
        #[command(flatten)]
        label: LabelArgs,
    },
    /// Minimal and maximal theta images.
    Extremal {
        #[command(flatten)]
        series: SeriesArgs,
        #[command(flatten)]
        label: LabelArgs,
    },
    /// Centralizer of a semisimple class of U_N(F_q).
    Centralizer {
        #[arg(long, default_value_t = 3)]
        q: u64,
        /// Dimension N of the unitary space.
        #[arg(long)]
        n: usize,
        /// `exponent^multiplicity` tokens, e.g. `0^2,4^2`.
        #[arg(long, allow_hyphen_values = true)]
        orbits: String,
        /// Order of the cyclic group the exponents live in (default q^2 - 1).
        #[arg(long)]
        modulus: Option<u64>,
    },
    /// Transport a cuspidal support [GL part; lambda_k].
    Transport {
        /// GL part: `1` for trivial GL_1, `t:label` otherwise.
        #[arg(long, allow_hyphen_values = true)]
        support: String,
        #[command(flatten)]
        towers: TowerArgs,
        #[arg(long, default_value_t = 0)]
        k: usize,
    },
    /// Omega_{m,m',rho} reduced to the unipotent table.
    OmegaFull {
        /// Orbits of the semisimple part s, as for `centralizer`.
        #[arg(long, allow_hyphen_values = true)]
        pair: String,
        #[command(flatten)]
        towers: TowerArgs,
        #[arg(long, default_value_t = 0)]
        k: usize,
        /// Nontrivial GL cuspidals `t:label` of the series (trivial GL_1s are filled in).
        #[arg(long, default_value = "")]
        sigma: String,
        #[arg(long, default_value_t = 3)]
        q: u64,
        #[arg(long)]
        modulus: Option<u64>,
    },
    /// Run the oracle-equivalence suite.
    Verify {
        #[arg(long, default_value_t = 4)]
        max_rank: usize,
        #[arg(long, default_value_t = LinearCharacter::CoxeterSign)]
        sgn: LinearCharacter,
    },
}

#[derive(Args, Debug)]
struct TowerArgs {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    mp: usize,
    /// Dimension parity of the partner tower (default: that of the source).
    #[arg(long = "parity-p")]
    parity_p: Option<usize>,
}

#[derive(Args, Debug)]
struct SeriesArgs {
    #[command(flatten)]
    towers: TowerArgs,
    #[arg(long)]
    k: usize,
    /// Dimension parity of the source tower (forced by k; checked if given).
    #[arg(long)]
    parity: Option<usize>,
    #[arg(long, default_value_t = LinearCharacter::CoxeterSign)]
    sgn: LinearCharacter,
}

#[derive(Args, Debug)]
struct LabelArgs {
    /// First component, e.g. `2,1`; empty or `-` for the empty partition.
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    alpha: String,
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    beta: String,
}

fn parse_partition(s: &str) -> Result<Partition> {
    let s = s.trim();
    if s.is_empty() || s == "-" {
        return Ok(Partition::empty());
    }
    let parts = s
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad part {t:?} in {s:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Partition::new(parts)
}

fn parity_arg(bit: usize) -> Result<Parity> {
    Parity::from_bit(bit)
}

impl SeriesArgs {
    fn resolve(&self) -> Result<(TowerContext, TowerContext, HoweConfig)> {
        let forced = Parity::of(triangular(self.k));
        let parity = match self.parity {
            Some(bit) => parity_arg(bit)?,
            None => forced,
        };
        let parity_p = match self.towers.parity_p {
            Some(bit) => parity_arg(bit)?,
            None => parity,
        };
        Ok((
            TowerContext::new(self.towers.m, parity),
            TowerContext::new(self.towers.mp, parity_p),
            HoweConfig::default().with_sgn(self.sgn),
        ))
    }
}

impl LabelArgs {
    fn label(&self, k: usize) -> Result<SeriesLabel> {
        Ok(SeriesLabel::new(
            k,
            Bipartition::new(parse_partition(&self.alpha)?, parse_partition(&self.beta)?),
        ))
    }
}

#[derive(Serialize)]
struct Image {
    label: Bipartition,
    multiplicity: u64,
}

#[derive(Serialize)]
struct ThetaOut {
    source: SeriesLabel,
    k_prime: usize,
    zero: bool,
    images: Vec<Image>,
}

#[derive(Serialize)]
struct ExtremalOut {
    source: SeriesLabel,
    zero: bool,
    min: Option<SeriesLabel>,
    max: Option<SeriesLabel>,
}

#[derive(Serialize)]
struct CentralizerOut {
    descriptor: DescriptorJson,
    decomposition: CentralizerDecomposition,
}

#[derive(Serialize)]
struct TransportOut {
    source: CuspidalSupport,
    zero: bool,
    image: Option<CuspidalSupport>,
}

#[derive(Serialize)]
struct OmegaFullOut {
    zero: bool,
    decomposition: Option<FullJson>,
}

#[derive(Serialize)]
struct VerifyOut {
    max_rank: usize,
    passed: bool,
    properties: Vec<PropertyReport>,
}

enum Output {
    Omega(TableJson, String),
    Theta(ThetaOut),
    Extremal(ExtremalOut),
    Centralizer(CentralizerOut),
    Transport(TransportOut),
    OmegaFull(OmegaFullOut, Option<String>),
    Verify(VerifyOut),
}

impl Output {
    fn json(&self) -> String {
        let value = match self {
            Output::Omega(t, _) => serde_json::to_string_pretty(t),
            Output::Theta(o) => serde_json::to_string_pretty(o),
            Output::Extremal(o) => serde_json::to_string_pretty(o),
            Output::Centralizer(o) => serde_json::to_string_pretty(o),
            Output::Transport(o) => serde_json::to_string_pretty(o),
            Output::OmegaFull(o, _) => serde_json::to_string_pretty(o),
            Output::Verify(o) => serde_json::to_string_pretty(o),
        };
        value.expect("output types serialize")
    }

    fn text(&self) -> String {
        match self {
            Output::Omega(_, text) => text.trim_end().to_string(),
            Output::Theta(o) => {
                if o.zero {
                    return format!("theta({}) = zero", o.source);
                }
                let mut lines = vec![format!("theta({}) in series k'={}:", o.source, o.k_prime)];
                lines.extend(o.images.iter().map(|i| format!("  {} x{}", i.label, i.multiplicity)));
                lines.join("\n")
            }
            Output::Extremal(o) => match (&o.min, &o.max) {
                (Some(min), Some(max)) => format!("theta({}): min {min}, max {max}", o.source),
                _ => format!("theta({}) = zero", o.source),
            },
            Output::Centralizer(o) => {
                let d = &o.decomposition;
                let mut lines = Vec::new();
                for f in &d.factors {
                    lines.push(format!(
                        "{:?}_{}(q^{}) orbit {:?}",
                        f.kind, f.size, f.field_degree, f.exponents
                    ));
                }
                lines.push(format!(
                    "unipotent block U_{} (Witt index {}), l = {}",
                    d.unipotent_block.dimension(),
                    d.unipotent_block.witt_index,
                    d.reduction_l
                ));
                lines.join("\n")
            }
            Output::Transport(o) => match &o.image {
                Some(img) => format!("{} -> {img}", o.source),
                None => format!("{} -> zero", o.source),
            },
            Output::OmegaFull(o, table) => match (&o.decomposition, table) {
                (Some(d), Some(table)) => {
                    let mut lines = vec![format!(
                        "G_# factors {}, pairing diagonal, l = {}, l' = {}",
                        d.hash_descriptor.len(),
                        d.reduction_l,
                        d.reduction_l_prime
                    )];
                    lines.push(table.trim_end().to_string());
                    lines.join("\n")
                }
                _ => "zero".to_string(),
            },
            Output::Verify(o) => {
                let mut lines: Vec<String> = o.properties.iter().map(ToString::to_string).collect();
                lines.push(if o.passed {
                    "all properties passed".to_string()
                } else {
                    "some properties FAILED".to_string()
                });
                lines.join("\n")
            }
        }
    }
}

fn run(command: Command) -> Result<Output> {
    match command {
        Command::Omega(series) => {
            let (ctx, ctx_p, cfg) = series.resolve()?;
            let table = omega_unipotent(&ctx, &ctx_p, series.k, &cfg)?;
            Ok(Output::Omega(table.to_json(), table.to_text()))
        }
        Command::Theta { series, label } => {
            let (ctx, ctx_p, cfg) = series.resolve()?;
            let source = label.label(series.k)?;
            let images = theta_images(&source, &ctx, &ctx_p, &cfg)?;
            let k_prime = cfg.theta_rule.theta(series.k, ctx_p.dim_parity);
            Ok(Output::Theta(ThetaOut {
                source,
                k_prime,
                zero: images.is_empty(),
                images: images
                    .into_iter()
                    .map(|(s, multiplicity)| Image {
                        label: s.char_label,
                        multiplicity,
                    })
                    .collect(),
            }))
        }
        Command::Extremal { series, label } => {
            let (ctx, ctx_p, cfg) = series.resolve()?;
            let source = label.label(series.k)?;
            let (min, max) = match extremal_images(&source, &ctx, &ctx_p, &cfg) {
                Ok((min, max)) => (Some(min), Some(max)),
                Err(Error::EmptyImage) => (None, None),
                Err(e) => return Err(e),
            };
            Ok(Output::Extremal(ExtremalOut {
                source,
                zero: min.is_none(),
                min,
                max,
            }))
        }
        Command::Centralizer { q, n, orbits, modulus } => {
            let ctx = TowerContext::of_dimension(q, n);
            ctx.validate()?;
            let s = SemisimpleDescriptor::parse(q, modulus.unwrap_or(default_modulus(q)), &orbits)?;
            let decomposition = centralizer_decomposition(&s, &ctx)?;
            Ok(Output::Centralizer(CentralizerOut {
                descriptor: s.to_json(),
                decomposition,
            }))
        }
        Command::Transport { support, towers, k } => {
            let parity = Parity::of(triangular(k));
            let parity_p = towers.parity_p.map_or(Ok(parity), parity_arg)?;
            let ctx = TowerContext::new(towers.m, parity);
            let ctx_p = TowerContext::new(towers.mp, parity_p);
            let cfg = HoweConfig::default();
            let source = CuspidalSupport::new(parse_gl_part(&support)?, CuspidalDatum::Unipotent { k });
            let image = transport_support(&source, &ctx, &ctx_p, &cfg)?;
            Ok(Output::Transport(TransportOut {
                zero: image.is_none(),
                source,
                image,
            }))
        }
        Command::OmegaFull {
            pair,
            towers,
            k,
            sigma,
            q,
            modulus,
        } => {
            let s = SemisimpleDescriptor::parse(q, modulus.unwrap_or(default_modulus(q)), &pair)?;
            let dim = s.dimension();
            if dim < 2 * towers.m || dim > 2 * towers.m + 1 {
                return Err(Error::RankSumMismatch {
                    expected: 2 * towers.m,
                    found: dim,
                });
            }
            let ctx = TowerContext::with_q(q, towers.m, Parity::of(dim))?;
            let parity_p = towers.parity_p.map_or(Ok(ctx.dim_parity), parity_arg)?;
            let ctx_p = TowerContext::with_q(q, towers.mp, parity_p)?;
            let mut gl_part = parse_gl_part(&sigma)?;
            if gl_part.iter().any(GlCuspidal::is_trivial) {
                return Err(Error::InvalidSupport(
                    "--sigma takes nontrivial GL cuspidals only".into(),
                ));
            }
            let block = centralizer_decomposition(&s, &ctx)?.unipotent_block;
            gl_part.extend(vec![GlCuspidal::trivial(); block.series_rank(k)?]);
            let cfg = HoweConfig::default();
            let pair = CuspidalPair::new(gl_part, k, s);
            match omega_full(&pair, &ctx, &ctx_p, &cfg) {
                Ok(full) => Ok(Output::OmegaFull(
                    OmegaFullOut {
                        zero: false,
                        decomposition: Some(full.to_json()),
                    },
                    Some(full.unipotent_table.to_text()),
                )),
                Err(Error::EmptyImage) => Ok(Output::OmegaFull(
                    OmegaFullOut {
                        zero: true,
                        decomposition: None,
                    },
                    None,
                )),
                Err(e) => Err(e),
            }
        }
        Command::Verify { max_rank, sgn } => {
            let properties = run_suite(max_rank, &HoweConfig::default().with_sgn(sgn));
            Ok(Output::Verify(VerifyOut {
                max_rank,
                passed: properties.iter().all(|p| p.passed),
                properties,
            }))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            // clap renders several lines; keep the message, drop the usage hint
            let rendered = e.to_string();
            let message: Vec<&str> = rendered
                .lines()
                .map(str::trim)
                .take_while(|l| !l.starts_with("Usage:"))
                .filter(|l| !l.is_empty())
                .collect();
            eprintln!("{}", message.join(" "));
            return ExitCode::from(1);
        }
    };
    match run(cli.command) {
        Ok(out) => {
            if cli.json {
                println!("{}", out.json());
            } else {
                println!("{}", out.text());
            }
            match out {
                Output::Verify(v) if !v.passed => ExitCode::from(2),
                _ => ExitCode::SUCCESS,
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_invariant_violation() { 2 } else { 1 })
        }
    }
}
