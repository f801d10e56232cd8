use std::collections::HashMap;

/// Names for the variables of a polynomial space. Arithmetic never looks at
/// these; they only matter for parsing and printing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
    lookup: HashMap<String, usize>,
}

impl Alphabet {
    /// `z1, ..., zn`.
    pub fn z(nvars: usize) -> Self {
        Self::new((1..=nvars).map(|i| format!("z{i}")).collect())
    }

    /// `p1, ..., pn`, used for polynomials in elementary symmetric functions.
    pub fn p(nvars: usize) -> Self {
        Self::new((1..=nvars).map(|i| format!("p{i}")).collect())
    }

    pub fn new(names: Vec<String>) -> Self {
        let lookup = names
            .iter()
            .enumerate()
            .map(|(i, name)| (name.clone(), i))
            .collect::<HashMap<_, _>>();
        assert_eq!(lookup.len(), names.len(), "duplicate variable name");
        Alphabet { names, lookup }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.lookup.get(name).copied()
    }
}
