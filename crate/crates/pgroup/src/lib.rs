//! Command-line front end for `pgroup-core`: presentation files, element
//! and subgroup queries, and the verification suite.
//!
//! Exit codes: 0 when everything passes, 1 when a check fails, 2 for usage
//! or input errors and 3 when a resource limit is hit.

pub mod cli;
pub mod input;
pub mod render;

use std::io::Write;
use std::time::Instant;

use anyhow::{anyhow, bail, Result};
use pgroup_core::consistency::{check_consistency, ensure_consistent};
use pgroup_core::corpus::{self, registry, Spec};
use pgroup_core::properties::{pn_class, verify_chain};
use pgroup_core::report::{CheckReport, Clock, NoClock, Status};
use pgroup_core::subgroup::close;
use pgroup_core::theorems::{build_omega_chain, run_suite, Mode, SuiteConfig};
use pgroup_core::{Group, Limits, Subgroup};

use cli::{Cli, Command, CorpusCommand, Format, Op, OpArgs, VerifyArgs};

pub const EXIT_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_RESOURCE: u8 = 3;

/// Whether every check that ran passed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Failed,
}

impl Outcome {
    fn of(reports: &[CheckReport]) -> Outcome {
        if reports.iter().any(|r| r.status == Status::Fail) {
            Outcome::Failed
        } else {
            Outcome::Pass
        }
    }

    pub fn code(self) -> u8 {
        match self {
            Outcome::Pass => 0,
            Outcome::Failed => EXIT_FAILED,
        }
    }
}

/// Exit code for an error raised by [`run`].
pub fn error_code(err: &anyhow::Error) -> u8 {
    let limit = err
        .chain()
        .filter_map(|e| e.downcast_ref::<pgroup_core::Error>())
        .any(|e| e.is_resource_limit());
    if limit {
        EXIT_RESOURCE
    } else {
        EXIT_USAGE
    }
}

struct WallClock(Instant);

impl Clock for WallClock {
    fn now_ms(&self) -> u64 {
        self.0.elapsed().as_millis() as u64
    }
}

/// Executes one parsed command, writing results to `out`.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<Outcome> {
    let limits = Limits {
        max_steps: cli.max_steps,
        max_elements: cli.max_elements,
    };
    let open = |file: &str| -> Result<(String, Group)> {
        let loaded = input::load(file)?;
        Ok((loaded.name, Group::with_limits(loaded.presentation, limits)))
    };
    let open_consistent = |file: &str| -> Result<(String, Group)> {
        let (name, group) = open(file)?;
        ensure_consistent(&group)?;
        Ok((name, group))
    };

    match cli.command {
        Command::Parse { file } => {
            let pres = input::load(&file)?.presentation;
            let names = pres.names().join(" ");
            let orders: Vec<String> = (0..pres.len()).map(|i| pres.relative_order(i).to_string()).collect();
            let powers = (0..pres.len()).filter(|&i| !pres.power_relation(i).is_identity()).count();
            let comms = (0..pres.len())
                .flat_map(|j| (0..j).map(move |i| (j, i)))
                .filter(|&(j, i)| !pres.commutator_relation(j, i).is_identity())
                .count();
            writeln!(out, "p = {}", pres.prime())?;
            writeln!(out, "generators: {names}")?;
            writeln!(out, "relative orders: {}", orders.join(" "))?;
            writeln!(out, "relations: {powers} power, {comms} commutator")?;
            writeln!(out, "candidate order: {}^{} = {}", pres.prime(), pres.order_log(), pres.candidate_order())?;
            Ok(Outcome::Pass)
        }
        Command::Consistency { file, format } => {
            let (name, group) = open(&file)?;
            let report = check_consistency(&group)?;
            write_reports(out, &name, &group, &[report], format, false)
        }
        Command::Order { file } => {
            let (_, group) = open_consistent(&file)?;
            writeln!(out, "{}^{} = {}", group.prime(), group.order_log(), group.order())?;
            Ok(Outcome::Pass)
        }
        Command::Nf { file, word } => {
            let (_, group) = open_consistent(&file)?;
            let x = input::element(&group, &word)?;
            writeln!(out, "{}", group.format(&x))?;
            Ok(Outcome::Pass)
        }
        Command::Ord { file, word } => {
            let (_, group) = open_consistent(&file)?;
            let x = input::element(&group, &word)?;
            writeln!(out, "{}", group.order_of(&x)?)?;
            Ok(Outcome::Pass)
        }
        Command::Sub { file, gens, op } => {
            let (_, group) = open_consistent(&file)?;
            let h = close(&group, &input::elements(&group, &gens)?)?;
            match apply(&h, &op)? {
                Value::Subgroup(s) => write_subgroup(out, &s)?,
                Value::Number(n) => writeln!(out, "{n}")?,
            }
            Ok(Outcome::Pass)
        }
        Command::Pnclass { file, gens, op } => {
            let (_, group) = open_consistent(&file)?;
            let h = match gens {
                Some(list) => close(&group, &input::elements(&group, &list)?)?,
                None => Subgroup::whole(&group)?,
            };
            let Value::Subgroup(h) = apply(&h, &op)? else {
                bail!("--op must produce a subgroup for pnclass");
            };
            match pn_class(&h)? {
                Some(c) => writeln!(out, "{c}")?,
                None => writeln!(out, "none")?,
            }
            Ok(Outcome::Pass)
        }
        Command::Chain { file, i, format } => {
            let (name, group) = open_consistent(&file)?;
            let chain = build_omega_chain(&group, i)?;
            let report = verify_chain(&chain.terms()[0], &chain)?.param("i", i);
            if format == Format::Text {
                for (l, term) in chain.terms().iter().enumerate() {
                    writeln!(out, "S_{l}: order {}^{} {}", group.prime(), term.order_log(), term.describe())?;
                }
            }
            write_reports(out, &name, &group, &[report], format, false)
        }
        Command::Verify(args) => verify(out, args, limits),
        Command::Corpus(CorpusCommand::List) => {
            for spec in registry() {
                let pres = spec.build()?;
                writeln!(out, "{:<20} {}^{}", spec.name(), pres.prime(), pres.order_log())?;
            }
            Ok(Outcome::Pass)
        }
        Command::Corpus(CorpusCommand::Emit {
            name,
            p,
            parts,
            alpha,
            beta,
            gamma,
            delta,
            output,
        }) => {
            let spec = match corpus::lookup(&name) {
                Some(spec) => spec,
                None => {
                    let need = |v: Option<u32>, flag: &str| v.ok_or_else(|| anyhow!("`{name}` needs --{flag}"));
                    let p = p.ok_or_else(|| anyhow!("`{name}` needs --p"));
                    match name.as_str() {
                        "example1" => Spec::Example1 { p: p? },
                        "example2" => Spec::Example2,
                        "example2_odd" => Spec::Example2Odd { p: p? },
                        "abelian" => Spec::Abelian {
                            p: p?,
                            parts: parts.ok_or_else(|| anyhow!("`abelian` needs --parts"))?,
                        },
                        "family" => Spec::Family {
                            p: p?,
                            alpha: need(alpha, "alpha")?,
                            beta: need(beta, "beta")?,
                            gamma: need(gamma, "gamma")?,
                            delta: need(delta, "delta")?,
                        },
                        _ => bail!("no corpus group or family named `{name}`"),
                    }
                }
            };
            let text = spec.build()?.render();
            match output {
                Some(path) => std::fs::write(&path, text)?,
                None => out.write_all(text.as_bytes())?,
            }
            Ok(Outcome::Pass)
        }
    }
}

enum Value<'g> {
    Subgroup(Subgroup<'g>),
    Number(u64),
}

fn apply<'g>(h: &Subgroup<'g>, op: &OpArgs) -> Result<Value<'g>> {
    let Some(kind) = op.op else {
        if op.i.is_some() || op.j.is_some() {
            bail!("--i and --j need --op");
        }
        return Ok(Value::Subgroup(h.clone()));
    };
    Ok(match kind {
        Op::Omega => Value::Subgroup(h.omega(op.i.ok_or_else(|| anyhow!("--op omega needs --i"))?)?),
        Op::Agemo => Value::Subgroup(h.agemo(op.j.ok_or_else(|| anyhow!("--op agemo needs --j"))?)?),
        Op::Derived => Value::Subgroup(h.derived()?),
        Op::Exponent => Value::Number(h.exponent()?),
        Op::Order => Value::Number(h.order()),
    })
}

fn write_subgroup(out: &mut dyn Write, h: &Subgroup<'_>) -> Result<()> {
    let group = h.group();
    let gens: Vec<String> = h.igs().map(|x| group.format(x)).collect();
    let gens = if gens.is_empty() { "1".to_string() } else { gens.join(",") };
    writeln!(out, "gens: {gens}")?;
    writeln!(out, "order: {}^{} = {}", group.prime(), h.order_log(), h.order())?;
    Ok(())
}

fn parse_mode(text: &str, seed: u64) -> Result<Mode> {
    let default_samples = match Mode::default() {
        Mode::Auto { samples, .. } => samples,
        _ => 10_000,
    };
    Ok(match text {
        "exhaustive" => Mode::Exhaustive,
        "auto" => match Mode::default() {
            Mode::Auto { threshold, samples, .. } => Mode::Auto { threshold, samples, seed },
            other => other,
        },
        "sample" => Mode::Sample {
            samples: default_samples,
            seed,
        },
        _ => {
            let n = text
                .strip_prefix("sample:")
                .and_then(|n| n.parse::<u64>().ok())
                .filter(|&n| n > 0)
                .ok_or_else(|| anyhow!("--mode expects auto, exhaustive or sample:N, got `{text}`"))?;
            Mode::Sample { samples: n, seed }
        }
    })
}

fn verify(out: &mut dyn Write, args: VerifyArgs, limits: Limits) -> Result<Outcome> {
    let loaded = input::load(&args.file)?;
    let group = Group::with_limits(loaded.presentation, limits);
    let config = SuiteConfig {
        suite: args.suite,
        i_max: args.i_max,
        j_max: args.j_max,
        k_max: args.k_max,
        mode: parse_mode(&args.mode, args.seed)?,
    };
    let reports = if args.timing {
        run_suite(&group, &config, &WallClock(Instant::now()))?
    } else {
        run_suite(&group, &config, &NoClock)?
    };
    write_reports(out, &loaded.name, &group, &reports, args.format, args.timing)
}

fn write_reports(
    out: &mut dyn Write,
    name: &str,
    group: &Group,
    reports: &[CheckReport],
    format: Format,
    timing: bool,
) -> Result<Outcome> {
    let text = match format {
        Format::Text => render::text(group, reports, timing),
        Format::Json => render::json(name, group, reports),
    };
    out.write_all(text.as_bytes())?;
    Ok(Outcome::of(reports))
}
