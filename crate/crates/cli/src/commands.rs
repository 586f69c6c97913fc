use std::io::{self, BufWriter, Write};
use std::time::Instant;

use pinnacle_core::oracle::{brute_count, cross_check_with};
use pinnacle_core::{
    alpha, count_pinnacle, count_via_dyck_sum, count_via_motzkin_sum, generate_all,
    is_admissible_ordering, list_admissible_orderings, order_count, q_by_subsets, q_meander,
    q_recurrence, AlphaMode, ExactCount, MeanderMode, Permutation, PinnacleProblem,
};
use serde::Serialize;

use crate::{
    AlphaArgs, AlphaModeArg, BenchArgs, Command, CountArgs, CountMethod, Format, GenerateArgs,
    Instance, OrdersArgs, Preset, QArgs, QMethod, VerifyArgs,
};

/// Why a command did not succeed.
#[derive(Debug)]
pub enum Failure {
    /// Malformed or out-of-range input.
    Input(String),
    /// `verify` found mismatches; the report is already printed.
    Verification,
    Io(io::Error),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Verification | Failure::Io(_) => 1,
        }
    }

    pub fn message(&self) -> Option<String> {
        match self {
            Failure::Input(m) => Some(m.clone()),
            Failure::Verification => None,
            Failure::Io(e) => Some(e.to_string()),
        }
    }
}

impl From<pinnacle_core::Error> for Failure {
    fn from(e: pinnacle_core::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = Result<(), Failure>;

pub fn run(command: Command) -> Outcome {
    let result = match command {
        Command::Count(a) => count(a),
        Command::Q(a) => q(a),
        Command::Orders(a) => orders(a),
        Command::Generate(a) => generate(a),
        Command::Alpha(a) => alpha_cmd(a),
        Command::Verify(a) => verify(a),
        Command::Bench(a) => bench(a),
    };
    match result {
        // A closed pipe (e.g. `| head`) is not an error for a stream.
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
        other => other,
    }
}

fn problem(instance: &Instance) -> Result<PinnacleProblem, Failure> {
    Ok(PinnacleProblem::new(
        instance.n,
        instance.pinnacles.0.iter().copied(),
    )?)
}

#[derive(Serialize)]
struct CountReport<'a> {
    n: usize,
    pinnacles: &'a [usize],
    method: &'a str,
    count: &'a ExactCount,
}

fn print_count(prob: &PinnacleProblem, method: &str, value: &ExactCount, json: bool) -> Outcome {
    let mut out = io::stdout().lock();
    if json {
        let report = CountReport {
            n: prob.n(),
            pinnacles: prob.pinnacles(),
            method,
            count: value,
        };
        serde_json::to_writer(&mut out, &report).map_err(io::Error::from)?;
        writeln!(out)?;
    } else {
        writeln!(out, "{value}")?;
    }
    Ok(())
}

fn method_name<T: clap::ValueEnum>(m: T) -> String {
    m.to_possible_value()
        .map(|v| v.get_name().to_string())
        .unwrap_or_default()
}

fn count(a: CountArgs) -> Outcome {
    let prob = problem(&a.instance)?;
    let value = match a.method {
        CountMethod::Rec => count_pinnacle(&prob),
        CountMethod::MotzkinSum => count_via_motzkin_sum(&prob)?,
        CountMethod::DyckSum => count_via_dyck_sum(&prob)?,
        CountMethod::Brute => brute_count(&prob)?,
    };
    print_count(&prob, &method_name(a.method), &value, a.json)
}

fn q(a: QArgs) -> Outcome {
    let prob = problem(&a.instance)?;
    let value = match a.method {
        QMethod::Rec => q_recurrence(&prob),
        QMethod::MeanderDp => q_meander(&prob, MeanderMode::Table)?,
        QMethod::MeanderEnum => q_meander(&prob, MeanderMode::Enumerate)?,
        QMethod::Subset => q_by_subsets(&prob)?,
    };
    print_count(&prob, &method_name(a.method), &value, a.json)
}

#[derive(Serialize)]
struct OrdersReport<'a> {
    pinnacles: &'a [usize],
    count: &'a ExactCount,
}

fn orders(a: OrdersArgs) -> Outcome {
    let pins = &a.pinnacles.0;
    if pins.is_empty() {
        return Err(Failure::Input(
            "orderings need a nonempty pinnacle set".into(),
        ));
    }
    let prob = PinnacleProblem::tight(pins.iter().copied())?;
    let mut out = BufWriter::new(io::stdout().lock());
    if let Some(sigma) = &a.check {
        let sigma: Permutation = sigma.parse()?;
        writeln!(out, "{}", is_admissible_ordering(&sigma, &prob)?)?;
    } else if a.list {
        for sigma in list_admissible_orderings(&prob)? {
            writeln!(out, "{sigma}")?;
        }
    } else {
        let value = order_count(&prob)?;
        if a.json {
            let report = OrdersReport {
                pinnacles: prob.pinnacles(),
                count: &value,
            };
            serde_json::to_writer(&mut out, &report).map_err(io::Error::from)?;
            writeln!(out)?;
        } else {
            writeln!(out, "{value}")?;
        }
    }
    out.flush()?;
    Ok(())
}

fn generate(a: GenerateArgs) -> Outcome {
    let prob = problem(&a.instance)?;
    let limit = a.limit.unwrap_or(usize::MAX);
    let mut out = BufWriter::new(io::stdout().lock());
    let stream = generate_all(&prob).take(limit);
    match a.format {
        Format::Lines => {
            for pi in stream {
                let mut first = true;
                for v in pi.as_slice() {
                    if !first {
                        out.write_all(b" ")?;
                    }
                    write!(out, "{v}")?;
                    first = false;
                }
                out.write_all(b"\n")?;
            }
        }
        Format::Json => {
            write!(out, "{{\"n\":{},\"pinnacles\":", prob.n())?;
            serde_json::to_writer(&mut out, prob.pinnacles()).map_err(io::Error::from)?;
            out.write_all(b",\"permutations\":[")?;
            for (i, pi) in stream.enumerate() {
                if i > 0 {
                    out.write_all(b",")?;
                }
                serde_json::to_writer(&mut out, pi.as_slice()).map_err(io::Error::from)?;
            }
            out.write_all(b"]}\n")?;
        }
    }
    out.flush()?;
    Ok(())
}

#[derive(Serialize)]
struct AlphaReport<'a> {
    k: usize,
    mode: &'a str,
    alpha: &'a ExactCount,
}

fn alpha_cmd(a: AlphaArgs) -> Outcome {
    let mode = match a.mode {
        AlphaModeArg::Ceiling => AlphaMode::Ceiling,
        AlphaModeArg::Oracle => AlphaMode::Oracle,
    };
    let value = alpha(a.k, mode)?;
    let mut out = io::stdout().lock();
    if a.json {
        let report = AlphaReport {
            k: a.k,
            mode: &method_name(a.mode),
            alpha: &value,
        };
        serde_json::to_writer(&mut out, &report).map_err(io::Error::from)?;
        writeln!(out)?;
    } else {
        writeln!(out, "{value}")?;
    }
    Ok(())
}

fn verify(a: VerifyArgs) -> Outcome {
    let start = Instant::now();
    let report = if a.corrupt {
        cross_check_with(a.max_n, |p| {
            let c = count_pinnacle(p);
            if p.k() == 1 {
                c + ExactCount::one()
            } else {
                c
            }
        })?
    } else {
        cross_check_with(a.max_n, count_pinnacle)?
    };
    let elapsed = start.elapsed();
    let mut out = BufWriter::new(io::stdout().lock());
    for level in &report.levels {
        writeln!(
            out,
            "n={:<2} permutations={:<8} pinnacle sets={:<4} motzkin types={}",
            level.n,
            level.total(),
            level.counts.len(),
            level.motzkin_classes.len()
        )?;
    }
    for m in &report.mismatches {
        writeln!(out, "MISMATCH {m}")?;
    }
    let status = if report.is_ok() { "OK" } else { "FAIL" };
    writeln!(
        out,
        "{status}: n <= {}, {} instances, {} mismatches, {:.2}s",
        report.max_n,
        report.instances,
        report.mismatches.len(),
        elapsed.as_secs_f64()
    )?;
    out.flush()?;
    if report.is_ok() {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn bench(a: BenchArgs) -> Outcome {
    let presets = if a.presets.is_empty() {
        vec![Preset::PaperN100, Preset::LargeN, Preset::LargeK]
    } else {
        a.presets
    };
    let mut out = io::stdout().lock();
    writeln!(
        out,
        "{:<12} {:>8} {:>5} {:>8} {:>12}",
        "preset", "n", "k", "digits", "seconds"
    )?;
    for preset in presets {
        let prob = match preset {
            Preset::PaperN100 => PinnacleProblem::new(
                100,
                [
                    97, 94, 85, 79, 68, 67, 63, 48, 43, 38, 25, 24, 23, 18, 13, 8, 3,
                ],
            )?,
            Preset::LargeN => PinnacleProblem::spread(100_000, 50)?,
            Preset::LargeK => PinnacleProblem::spread(1_000, 200)?,
        };
        let start = Instant::now();
        let value = count_pinnacle(&prob);
        let secs = start.elapsed().as_secs_f64();
        writeln!(
            out,
            "{:<12} {:>8} {:>5} {:>8} {:>12.6}",
            method_name(preset),
            prob.n(),
            prob.k(),
            value.to_string().len(),
            secs
        )?;
        if preset == Preset::PaperN100 {
            writeln!(out, "count = {value}")?;
        }
    }
    Ok(())
}
