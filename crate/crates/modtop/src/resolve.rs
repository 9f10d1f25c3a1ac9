//! Formula arguments on the command line: either the ASCII syntax, or a
//! shortcut `@Name` for a named axiom and `@C<n>` for the cycle scheme on
//! fresh variables.

use modtop_core::formula::{fresh_vars, named_axiom, parse, scheme_c};
use modtop_core::Formula;

use crate::error::{Result, ToolError};

pub fn resolve_formula(text: &str) -> Result<Formula> {
    let text = text.trim();
    let Some(name) = text.strip_prefix('@') else {
        return Ok(parse(text)?);
    };
    if let Some(n) = name.strip_prefix('C').and_then(|n| n.parse::<usize>().ok()) {
        return Ok(scheme_c(n, &fresh_vars(n))?);
    }
    named_axiom(name).map_err(|_| {
        ToolError::Usage(format!(
            "unknown shortcut `@{name}`; use @C<n> or one of {}",
            modtop_core::formula::AXIOM_NAMES.join(", ")
        ))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shortcuts() {
        assert_eq!(resolve_formula("@D").unwrap(), parse("<>T").unwrap());
        assert_eq!(resolve_formula(" @C1 ").unwrap().vars().len(), 2);
        assert_eq!(resolve_formula("@Löb").unwrap(), named_axiom("Loeb").unwrap());
        assert!(matches!(resolve_formula("@X"), Err(ToolError::Usage(_))));
        assert!(matches!(resolve_formula("p &"), Err(ToolError::Parse(_))));
    }
}
