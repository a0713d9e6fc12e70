//! Command-line interface: parse element expressions, run the algebra
//! operations, and drive the verification sweeps.
//!
//! Exit codes: 0 on success, 1 when a verification (or `--check-oracle`)
//! fails, 2 on usage or parse errors.

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use bqsym::compositions::{
    compositions_of, peak_compositions_of, peak_pseudo_compositions_of, pseudo_compositions_of,
};
use bqsym::expr::{self, Style};
use bqsym::json;
use bqsym::oracle::expand_element;
use bqsym::oracle::verify::{verify_degree_with_fault, Check, DegreeReport, Fault};
use bqsym::peak;
use bqsym::qsym::QSymElement;
use bqsym::{Error, TensorElement};

#[derive(Parser)]
#[command(name = "bqsym", version, about = "Exact type B quasisymmetric function calculator")]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Basis used to print element results
    #[arg(long = "out-basis", global = true, value_enum, ignore_case = true, default_value_t = OutBasis::M)]
    out_basis: OutBasis,

    /// Guard: reject inputs (and products) above this degree; also the sweep
    /// depth of `verify`
    #[arg(long = "max-degree", global = true)]
    max_degree: Option<u32>,

    /// Index presentation: `a` prints embedded type A indices without their
    /// leading zero and selects the type A flavor in `theta` and `k`
    #[arg(long = "type", global = true, value_enum, default_value_t = TypeFlag::B)]
    flavor: TypeFlag,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutBasis {
    M,
    F,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "lower")]
enum TypeFlag {
    A,
    B,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CoproductVariant {
    A,
    B,
    Chow,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AntipodeVariant {
    A,
    B,
    Recursive,
}

#[derive(Subcommand)]
enum Command {
    /// Multiply two element expressions
    Mul {
        lhs: String,
        rhs: String,
        /// Re-verify the product against the truncated-polynomial oracle
        #[arg(long = "check-oracle")]
        check_oracle: bool,
    },
    /// Apply a coproduct to an element expression
    Coproduct {
        #[arg(long, value_enum, default_value_t = CoproductVariant::B)]
        variant: CoproductVariant,
        expr: String,
    },
    /// Apply an antipode to an element expression
    Antipode {
        #[arg(long, value_enum, default_value_t = AntipodeVariant::B)]
        variant: AntipodeVariant,
        expr: String,
    },
    /// Rewrite an element in the selected basis
    Convert {
        #[arg(long, value_enum)]
        to: OutBasis,
        expr: String,
    },
    /// Apply the theta projection onto the peak span
    Theta { expr: String },
    /// Expand the peak function of an index, e.g. `k 2,1` or `k "[0,2]"`
    K { index: String },
    /// Descent and peak statistics of a signed permutation literal
    Stats { permutation: String },
    /// Dimension counts at one degree
    Dims {
        #[arg(value_parser = clap::value_parser!(u32).range(0..=16))]
        n: u32,
    },
    /// Run the identity sweeps and report pass/fail per check
    Verify {
        /// Comma-separated subset of check names (default: all)
        #[arg(long, value_delimiter = ',')]
        checks: Option<Vec<String>>,
        /// Deliberately corrupt an operation to exercise failure reporting
        #[arg(long = "inject-fault", hide = true)]
        inject_fault: Option<String>,
    },
}

#[derive(Serialize)]
struct StatsJson {
    des_b: Vec<u32>,
    c_b: Vec<u32>,
    pe_b: Vec<u32>,
    peak_c_b: Vec<u32>,
}

#[derive(Serialize)]
struct DimsJson {
    n: u32,
    compositions: usize,
    pseudo: usize,
    peak_a: usize,
    peak_b: usize,
}

fn main() -> std::process::ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(error) => {
            eprintln!("error: {error}");
            std::process::ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<std::process::ExitCode, Error> {
    let style = Style {
        strip_leading_zero: cli.flavor == TypeFlag::A,
    };
    match &cli.command {
        Command::Mul {
            lhs,
            rhs,
            check_oracle,
        } => {
            let left = parse_guarded(cli, lhs)?;
            let right = parse_guarded(cli, rhs)?;
            let total = left.max_degree().unwrap_or(0) + right.max_degree().unwrap_or(0);
            if let Some(guard) = cli.max_degree {
                if total > guard {
                    return Err(Error::DegreeGuard {
                        degree: total,
                        guard,
                    });
                }
            }
            let product = left.multiply(&right);
            if *check_oracle {
                let vars = total as usize;
                let direct = expand_element(&product, vars)?;
                let expected = expand_element(&left, vars)?.multiply(&expand_element(&right, vars)?);
                if direct != expected {
                    eprintln!("oracle mismatch: product disagrees with polynomial multiplication");
                    return Ok(std::process::ExitCode::from(1));
                }
            }
            print_element(cli, style, &product);
            Ok(std::process::ExitCode::SUCCESS)
        }
        Command::Coproduct { variant, expr } => {
            let element = parse_guarded(cli, expr)?;
            let tensor = match variant {
                CoproductVariant::A => element.coproduct_a()?,
                CoproductVariant::B => element.coproduct_b(),
                CoproductVariant::Chow => element.coproduct_chow(),
            };
            print_tensor(cli, style, &tensor);
            Ok(std::process::ExitCode::SUCCESS)
        }
        Command::Antipode { variant, expr } => {
            let element = parse_guarded(cli, expr)?;
            let image = match variant {
                AntipodeVariant::A => element.antipode_a()?,
                AntipodeVariant::B => element.antipode_b(),
                AntipodeVariant::Recursive => element.antipode_recursive(),
            };
            print_element(cli, style, &image);
            Ok(std::process::ExitCode::SUCCESS)
        }
        Command::Convert { to, expr } => {
            let element = parse_guarded(cli, expr)?;
            let converted = match to {
                OutBasis::M => element.to_monomial(),
                OutBasis::F => element.to_fundamental(),
            };
            // --to overrides the global output basis
            print_converted(cli, style, &converted);
            Ok(std::process::ExitCode::SUCCESS)
        }
        Command::Theta { expr } => {
            let element = parse_guarded(cli, expr)?;
            let image = match cli.flavor {
                TypeFlag::A => peak::theta(&element)?,
                TypeFlag::B => peak::theta_b(&element),
            };
            print_element(cli, style, &image);
            Ok(std::process::ExitCode::SUCCESS)
        }
        Command::K { index } => {
            let index = expr::parse_parts(index)?;
            let expansion = match cli.flavor {
                TypeFlag::A => {
                    let composition = index.as_type_a().ok_or_else(|| Error::NotTypeA {
                        index: index.to_string(),
                    })?;
                    peak::k_function_a(&composition)
                }
                TypeFlag::B => peak::k_function_b(&index),
            };
            print_element(cli, style, &expansion);
            Ok(std::process::ExitCode::SUCCESS)
        }
        Command::Stats { permutation } => {
            let pi = expr::parse_signed_permutation(permutation)?;
            let des = pi.descent_set_b();
            let c_b = pi.descent_composition();
            let pe_b = pi.peak_set_b();
            let peak_c_b = pi.peak_composition_b();
            match cli.format {
                Format::Text => {
                    println!("Des_B = {des}");
                    println!("C_B = {c_b}");
                    let rendered: Vec<String> = pe_b.iter().map(u32::to_string).collect();
                    println!("Pe_B = {{{}}}", rendered.join(","));
                    println!("peak C_B = {peak_c_b}");
                }
                Format::Json => {
                    let payload = StatsJson {
                        des_b: des.elements().iter().copied().collect(),
                        c_b: c_b.parts().to_vec(),
                        pe_b: pe_b.iter().copied().collect(),
                        peak_c_b: peak_c_b.parts().to_vec(),
                    };
                    println!("{}", serde_json::to_string(&payload).expect("serializable"));
                }
            }
            Ok(std::process::ExitCode::SUCCESS)
        }
        Command::Dims { n } => {
            let payload = DimsJson {
                n: *n,
                compositions: compositions_of(*n).len(),
                pseudo: pseudo_compositions_of(*n).len(),
                peak_a: peak_compositions_of(*n).len(),
                peak_b: peak_pseudo_compositions_of(*n).len(),
            };
            match cli.format {
                Format::Text => println!(
                    "n={}: compositions={} pseudo={} peakA={} peakB={}",
                    payload.n, payload.compositions, payload.pseudo, payload.peak_a, payload.peak_b
                ),
                Format::Json => {
                    println!("{}", serde_json::to_string(&payload).expect("serializable"))
                }
            }
            Ok(std::process::ExitCode::SUCCESS)
        }
        Command::Verify {
            checks,
            inject_fault,
        } => {
            let fault = match inject_fault.as_deref() {
                None => Fault::None,
                Some("product") => Fault::CorruptProduct,
                Some(other) => {
                    return Err(Error::Parse {
                        position: 0,
                        message: format!("unknown fault {other:?} (expected: product)"),
                    })
                }
            };
            let selected: Vec<Check> = match checks {
                None => Check::ALL.to_vec(),
                Some(names) => names
                    .iter()
                    .map(|name| {
                        Check::from_name(name).ok_or_else(|| Error::Parse {
                            position: 0,
                            message: format!("unknown check {name:?}"),
                        })
                    })
                    .collect::<Result<_, _>>()?,
            };
            let max_degree = cli.max_degree.unwrap_or(4);
            let reports: Vec<DegreeReport> = (0..=max_degree)
                .map(|n| {
                    let at_this_degree: Vec<Check> = selected
                        .iter()
                        .copied()
                        .filter(|&check| check != Check::WorkedExamples || n == 0)
                        .collect();
                    verify_degree_with_fault(n, &at_this_degree, fault)
                })
                .collect();
            let all_passed = bqsym::oracle::verify::reports_pass(&reports);
            match cli.format {
                Format::Text => {
                    for report in &reports {
                        for outcome in &report.checks {
                            let status = if outcome.passed { "pass" } else { "fail" };
                            match &outcome.counterexample {
                                None => println!("degree {} {}: {status}", report.degree, outcome.name),
                                Some(witness) => println!(
                                    "degree {} {}: {status} ({witness})",
                                    report.degree, outcome.name
                                ),
                            }
                        }
                    }
                }
                Format::Json => {
                    println!("{}", serde_json::to_string(&reports).expect("serializable"));
                }
            }
            Ok(if all_passed {
                std::process::ExitCode::SUCCESS
            } else {
                std::process::ExitCode::from(1)
            })
        }
    }
}

fn parse_guarded(cli: &Cli, source: &str) -> Result<QSymElement, Error> {
    let element = expr::parse_element(source)?;
    if let Some(guard) = cli.max_degree {
        if let Some(degree) = element.max_degree() {
            if degree > guard {
                return Err(Error::DegreeGuard { degree, guard });
            }
        }
    }
    Ok(element)
}

fn print_element(cli: &Cli, style: Style, element: &QSymElement) {
    let in_basis = match cli.out_basis {
        OutBasis::M => element.to_monomial(),
        OutBasis::F => element.to_fundamental(),
    };
    print_converted(cli, style, &in_basis)
}

fn print_converted(cli: &Cli, style: Style, element: &QSymElement) {
    match cli.format {
        Format::Text => println!("{}", expr::format_element(element, style)),
        Format::Json => println!("{}", json::element_to_string(element)),
    }
}

fn print_tensor(cli: &Cli, style: Style, tensor: &TensorElement) {
    match cli.format {
        Format::Text => println!("{}", expr::format_tensor(tensor, style)),
        Format::Json => println!("{}", json::tensor_to_string(tensor)),
    }
}
