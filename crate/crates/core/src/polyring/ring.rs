use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;
use std::time::Instant;

use crate::error::{Error, Result};
use crate::exactnum::{FieldConfig, FieldKind};

use super::MonomialOrder;

pub const DEFAULT_GB_DEGREE_CAP: u32 = 60;
pub const DEFAULT_LOCAL_N_CAP: u32 = 128;

/// Resource guards consulted by the Gröbner engine.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest S-polynomial degree Buchberger will process.
    pub gb_degree_cap: u32,
    /// Largest truncation `N` tried by local-length computations.
    pub local_n_cap: u32,
    pub deadline: Option<Instant>,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            gb_degree_cap: DEFAULT_GB_DEGREE_CAP,
            local_n_cap: DEFAULT_LOCAL_N_CAP,
            deadline: None,
        }
    }
}

impl Limits {
    pub fn check_deadline(&self) -> Result<()> {
        match self.deadline {
            Some(d) if Instant::now() > d => Err(Error::Resource("time budget exhausted".into())),
            _ => Ok(()),
        }
    }
}

/// `k[x_1, ..., x_n]` with a monomial order.
#[derive(Debug, Clone)]
pub struct RingContext {
    field: Arc<FieldConfig>,
    vars: Vec<String>,
    order: MonomialOrder,
    limits: Limits,
}

pub type Ring = Arc<RingContext>;

impl RingContext {
    pub fn new(field: Arc<FieldConfig>, vars: &[&str], order: MonomialOrder) -> Result<Ring> {
        Self::with_limits(
            field,
            vars.iter().map(|s| s.to_string()).collect(),
            order,
            Limits::default(),
        )
    }

    pub fn rational(vars: &[&str]) -> Ring {
        Self::new(FieldConfig::rationals(), vars, MonomialOrder::Grevlex).expect("valid variable names")
    }

    pub fn with_limits(
        field: Arc<FieldConfig>,
        vars: Vec<String>,
        order: MonomialOrder,
        limits: Limits,
    ) -> Result<Ring> {
        if vars.is_empty() {
            return Err(Error::InvalidArgument("a ring needs at least one variable".into()));
        }
        let mut seen = HashSet::new();
        for v in &vars {
            if !seen.insert(v.as_str()) {
                return Err(Error::InvalidArgument(format!("duplicate variable `{v}`")));
            }
            if field.kind() == FieldKind::NumberField && v == field.generator_name() {
                return Err(Error::InvalidArgument(format!(
                    "`{v}` is reserved for the number-field generator"
                )));
            }
        }
        if let MonomialOrder::Block(k) = order {
            if k > vars.len() {
                return Err(Error::InvalidArgument(format!(
                    "block split {k} exceeds {} variables",
                    vars.len()
                )));
            }
        }
        Ok(Arc::new(RingContext {
            field,
            vars,
            order,
            limits,
        }))
    }

    pub fn field(&self) -> &Arc<FieldConfig> {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn var_index(&self, name: &str) -> Result<usize> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    /// Same variables and field, different order.
    pub fn with_order(self: &Arc<Self>, order: MonomialOrder) -> Ring {
        if order == self.order {
            return self.clone();
        }
        Arc::new(RingContext {
            order,
            ..(**self).clone()
        })
    }

    pub fn with_new_limits(&self, limits: Limits) -> Ring {
        Arc::new(RingContext { limits, ..self.clone() })
    }

    /// Ring with `extra` prepended to the variable list, under the given order.
    pub fn extend_front(&self, extra: &[String], order: MonomialOrder) -> Result<Ring> {
        let mut vars: Vec<String> = extra.to_vec();
        vars.extend(self.vars.iter().cloned());
        Self::with_limits(self.field.clone(), vars, order, self.limits)
    }

    /// Ring on a subset of the variables (by index, in the given order).
    pub fn subring(&self, keep: &[usize], order: MonomialOrder) -> Result<Ring> {
        let vars = keep.iter().map(|&i| self.vars[i].clone()).collect();
        Self::with_limits(self.field.clone(), vars, order, self.limits)
    }

    /// A variable name not already used, built from `stem`.
    pub fn fresh_name(&self, stem: &str) -> String {
        let taken = |s: &str| self.vars.iter().any(|v| v == s) || s == self.field.generator_name();
        if !taken(stem) {
            return stem.to_string();
        }
        (0..).map(|i| format!("{stem}_{i}")).find(|s| !taken(s)).unwrap()
    }

    /// Same field, variables and order; limits are ignored.
    pub fn same_as(self: &Arc<Self>, other: &Ring) -> bool {
        Arc::ptr_eq(self, other) || (self.order == other.order && self.vars == other.vars && self.field == other.field)
    }

    /// Same field and variables, possibly different orders.
    pub fn compatible(&self, other: &RingContext) -> bool {
        self.vars == other.vars && self.field == other.field
    }

    /// Header in jobfile syntax, e.g. `Q(t|t^2+t+1)[x,y,z] grevlex`.
    pub fn header(&self) -> String {
        let field = match self.field.modulus() {
            None => "Q".to_string(),
            Some(m) => {
                let g = self.field.generator_name();
                format!("Q({g}|{})", render_univariate(m, g))
            }
        };
        format!("{field}[{}] {}", self.vars.join(","), self.order)
    }
}

fn render_univariate(cs: &[crate::exactnum::Rational], var: &str) -> String {
    let mut out = String::new();
    for (i, c) in cs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let abs = if neg { c.neg() } else { c.clone() };
        if !out.is_empty() || neg {
            out.push(if neg { '-' } else { '+' });
        }
        let pow = match i {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{i}"),
        };
        match (pow.is_empty(), abs.is_one()) {
            (true, _) => out.push_str(&abs.to_string()),
            (false, true) => out.push_str(&pow),
            (false, false) => out.push_str(&format!("{abs}*{pow}")),
        }
    }
    out
}

impl fmt::Display for RingContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.header())
    }
}
