use std::fs;
use std::io::Write;
use std::path::Path;
use std::process::ExitCode;
use std::time::Instant;

use macqt_core::hspace::{
    from_hbasis, hmu_monomial, m_table, oracle_m_table, set_cache_dir, supersets, to_hbasis,
};
use macqt_core::pieri::{ck_edges, dk, e1_edges, skew_edges, PieriEdge, PieriKind};
use macqt_core::qalgebra::{apply_q, q_const, QIndex};
use macqt_core::verify::{run_suite, Suite};
use macqt_core::{clear_caches, Basis, HExp, Partition, SymFun};
use serde::Serialize;

use crate::{Algo, BasisArg, Cli, Command, Format, PieriOp};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Engine(#[from] macqt_core::Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl CliError {
    /// True when stdout was closed by the reader, which is not worth reporting.
    pub fn is_broken_pipe(&self) -> bool {
        matches!(self, CliError::Io { source, .. } if source.kind() == std::io::ErrorKind::BrokenPipe)
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } => 2,
            CliError::Engine(e) => match e {
                macqt_core::Error::Parse(_)
                | macqt_core::Error::InvalidPartition(_)
                | macqt_core::Error::NotCoprime(..)
                | macqt_core::Error::UnsupportedRegion(..) => 2,
                _ => 1,
            },
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn basis(b: BasisArg) -> Basis {
    match b {
        BasisArg::M => Basis::M,
        BasisArg::S => Basis::S,
        BasisArg::E => Basis::E,
        BasisArg::H => Basis::H,
        BasisArg::P => Basis::P,
    }
}

pub fn parse_partition(s: &str) -> Result<Partition> {
    if s.trim() == "0" {
        return Ok(Partition::empty());
    }
    s.parse().map_err(|_| {
        CliError::Usage(format!(
            "malformed partition {s:?}; expected parts like 3,2,1"
        ))
    })
}

fn emit<T: Serialize + std::fmt::Display>(value: &T, format: Format) -> Result<()> {
    let text = match format {
        Format::Text => value.to_string(),
        Format::Json => serde_json::to_string_pretty(value).expect("serializable output"),
    };
    line(&mut std::io::stdout().lock(), &text)
}

fn line(out: &mut impl Write, text: &str) -> Result<()> {
    writeln!(out, "{text}").map_err(|source| CliError::Io {
        path: "stdout".to_string(),
        source,
    })
}

enum Loaded {
    Sym(SymFun),
    H(HExp),
}

fn load(path: &Path) -> Result<Loaded> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let trimmed = text.trim();
    if trimmed.starts_with('{') {
        let value: serde_json::Value = serde_json::from_str(trimmed)
            .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
        let bad = |e: serde_json::Error| CliError::Usage(format!("{}: {e}", path.display()));
        if value.get("basis").and_then(|b| b.as_str()) == Some("H") {
            return Ok(Loaded::H(serde_json::from_value(value).map_err(bad)?));
        }
        return Ok(Loaded::Sym(serde_json::from_value(value).map_err(bad)?));
    }
    if trimmed.contains("H[") {
        return Ok(Loaded::H(trimmed.parse()?));
    }
    Ok(Loaded::Sym(trimmed.parse()?))
}

#[derive(Serialize)]
struct Edges(Vec<PieriEdge>);

impl std::fmt::Display for Edges {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let lines: Vec<String> = self
            .0
            .iter()
            .map(|e| {
                let (from, to) = match e.kind {
                    PieriKind::C1 | PieriKind::Ck => (&e.mu, &e.nu),
                    PieriKind::D1 | PieriKind::Dk => (&e.nu, &e.mu),
                };
                format!("{from} -> {to}: {}", e.value)
            })
            .collect();
        f.write_str(&lines.join("\n"))
    }
}

fn pieri(op: PieriOp, shape: &Partition, k: usize) -> Result<Edges> {
    let edges = match op {
        PieriOp::E1 => e1_edges(shape),
        PieriOp::Skew => skew_edges(shape),
        PieriOp::Ck => ck_edges(shape, k),
        PieriOp::Dk => {
            let mut out = Vec::new();
            for mu in supersets(shape, k) {
                let value = dk(&mu, shape, k)?;
                if !value.is_zero() {
                    out.push(PieriEdge {
                        mu,
                        nu: shape.clone(),
                        value,
                        kind: PieriKind::Dk,
                        k,
                    });
                }
            }
            out
        }
    };
    Ok(Edges(edges))
}

#[derive(Serialize)]
struct Report {
    suite: String,
    max_n: u64,
    passed: bool,
    checks: Vec<macqt_core::verify::Check>,
}

impl std::fmt::Display for Report {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        write!(
            f,
            "suite {} (max n = {}): {} passed, {failed} failed",
            self.suite,
            self.max_n,
            self.checks.len() - failed
        )
    }
}

fn bench(max_n: u64, algo: Algo) -> Result<()> {
    set_cache_dir(None);
    let mut out = std::io::stdout().lock();
    let name = match algo {
        Algo::Bh => "bh",
        Algo::Oracle => "oracle",
    };
    line(&mut out, "n,algo,millis,table_entries")?;
    for n in 1..=max_n as usize {
        clear_caches();
        let start = Instant::now();
        let entries = match algo {
            Algo::Bh => m_table(n).len(),
            Algo::Oracle => oracle_m_table(n)?.len(),
        };
        let millis = start.elapsed().as_millis();
        line(&mut out, &format!("{n},{name},{millis},{entries}"))?;
    }
    Ok(())
}

pub fn run(cli: Cli) -> Result<ExitCode> {
    set_cache_dir(cli.cache_dir.clone());
    match cli.command {
        Command::Hmu {
            partition,
            basis: b,
            output,
        } => {
            let mu = parse_partition(&partition)?;
            emit(&hmu_monomial(&mu).convert(basis(b)), output.format)?;
        }
        Command::Pieri {
            op,
            partition,
            k,
            output,
        } => {
            let shape = parse_partition(&partition)?;
            emit(&pieri(op, &shape, k)?, output.format)?;
        }
        Command::Qop {
            m,
            n,
            constant,
            input,
            basis: b,
            output,
        } => {
            let result = if constant {
                q_const(m, n)?
            } else {
                let path = input.expect("clap requires --input without --const");
                let f = match load(&path)? {
                    Loaded::H(h) => h,
                    Loaded::Sym(s) => to_hbasis(&s),
                };
                apply_q(QIndex::new(m, n), &f)?
            };
            match b {
                Some(b) => emit(&from_hbasis(&result).convert(basis(b)), output.format)?,
                None => emit(&result, output.format)?,
            }
        }
        Command::Expand { input, output } => {
            let h = match load(&input)? {
                Loaded::H(h) => h,
                Loaded::Sym(s) => to_hbasis(&s),
            };
            emit(&h, output.format)?;
        }
        Command::Verify {
            suite,
            max_n,
            output,
        } => {
            let s: Suite = suite.parse()?;
            let checks = run_suite(s, max_n as usize);
            let passed = checks.iter().all(|c| c.passed);
            emit(
                &Report {
                    suite,
                    max_n,
                    passed,
                    checks,
                },
                output.format,
            )?;
            if !passed {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Bench { max_n, algo } => bench(max_n, algo)?,
    }
    Ok(ExitCode::SUCCESS)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_syntax() {
        assert_eq!(parse_partition("3,2,1").unwrap().to_string(), "[3,2,1]");
        assert!(parse_partition("0").unwrap().is_empty());
        assert!(parse_partition("[]").unwrap().is_empty());
        assert!(matches!(parse_partition("1,2"), Err(CliError::Usage(_))));
        assert!(matches!(parse_partition("a"), Err(CliError::Usage(_))));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(CliError::Usage("x".into()).exit_code(), 2);
        assert_eq!(
            CliError::Engine(macqt_core::Error::Parse("x".into())).exit_code(),
            2
        );
        assert_eq!(
            CliError::Engine(macqt_core::Error::DivisionByZero).exit_code(),
            1
        );
    }
}
