use std::fs;
use std::path::Path;

use ramsey_forge::completion::Lattice;
use ramsey_forge::relstruct::io::parse_structure;
use ramsey_forge::{ClassSpec, Structure};

use crate::error::{CliError, CliResult};

pub fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Read { path: path.to_path_buf(), source })
}

/// A spec file, or a built-in name when no such file exists.
pub fn spec(arg: &str) -> CliResult<ClassSpec> {
    let path = Path::new(arg);
    if path.is_file() {
        return Ok(ClassSpec::parse(&read(path)?)?);
    }
    builtin(arg).ok_or_else(|| CliError::Usage(format!("`{arg}` is neither a spec file nor a built-in spec")))?
}

fn builtin(name: &str) -> Option<CliResult<ClassSpec>> {
    let spec = match name {
        "rado" => ClassSpec::rado(),
        "triangle-free" => ClassSpec::triangle_free(),
        "marked-rado" => ClassSpec::marked_rado(),
        "ultrametric:diamond" => return Some(ClassSpec::ultrametric(Lattice::diamond()).map_err(Into::into)),
        _ => {
            if let Some(list) = name.strip_prefix("metric:") {
                let s: Result<Vec<u32>, _> = list.split(',').map(|x| x.trim().parse()).collect();
                return Some(match s {
                    Ok(s) => ClassSpec::metric(&s).map_err(Into::into),
                    Err(_) => Err(CliError::Usage(format!("bad distance list `{list}`"))),
                });
            }
            let k = name.strip_prefix("ultrametric:chain:")?;
            return Some(match k.parse::<usize>() {
                Ok(k) if k >= 1 => Ok(ClassSpec::chain_ultrametric(k)),
                _ => Err(CliError::Usage(format!("bad chain length `{k}`"))),
            });
        }
    };
    Some(Ok(spec))
}

/// A structure file, read in the spec's language when one is given.
pub fn structure(path: &Path, spec: Option<&ClassSpec>) -> CliResult<Structure> {
    Ok(parse_structure(&read(path)?, spec.map(|s| s.language()))?)
}
