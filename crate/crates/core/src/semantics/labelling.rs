//! Complete-labelling search.
//!
//! A complete labelling maps each argument to IN, OUT or UNDEC such that an
//! argument is IN iff all its attackers are OUT, and OUT iff some attacker
//! is IN. IN-sets of complete labellings are exactly the complete
//! extensions; those without UNDEC are the stable extensions.

use crate::bitset::ArgSet;
use crate::framework::ArgumentationFramework;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Label {
    Blank,
    In,
    Out,
    Undec,
}

/// IN-sets of all complete labellings (`stable = true`: those without UNDEC).
pub(super) fn complete(framework: &ArgumentationFramework, stable: bool) -> Vec<ArgSet> {
    let mut search = Search {
        framework,
        stable,
        found: Vec::new(),
    };
    let mut labels = vec![Label::Blank; framework.len()];
    if search.propagate(&mut labels) {
        search.branch(labels);
    }
    search.found
}

struct Search<'a> {
    framework: &'a ArgumentationFramework,
    stable: bool,
    found: Vec<ArgSet>,
}

impl Search<'_> {
    fn branch(&mut self, labels: Vec<Label>) {
        let Some(pick) = labels.iter().position(|l| *l == Label::Blank) else {
            let mut set = ArgSet::empty(labels.len());
            for (i, l) in labels.iter().enumerate() {
                if *l == Label::In {
                    set.insert(i);
                }
            }
            self.found.push(set);
            return;
        };
        let choices: &[Label] = if self.stable {
            &[Label::In, Label::Out]
        } else {
            &[Label::In, Label::Out, Label::Undec]
        };
        for &choice in choices {
            let mut next = labels.clone();
            next[pick] = choice;
            if self.propagate(&mut next) {
                self.branch(next);
            }
        }
    }

    /// Applies forced labels until a fixpoint; false on contradiction.
    fn propagate(&self, labels: &mut [Label]) -> bool {
        let fw = self.framework;
        loop {
            let mut changed = false;
            for a in 0..labels.len() {
                let mut any_in = false;
                let mut undec = 0usize;
                let mut blank = 0usize;
                let mut last_blank = 0usize;
                for b in fw.attackers_idx(a).iter() {
                    match labels[b] {
                        Label::In => any_in = true,
                        Label::Out => {}
                        Label::Undec => undec += 1,
                        Label::Blank => {
                            blank += 1;
                            last_blank = b;
                        }
                    }
                }
                let all_out = undec == 0 && blank == 0 && !any_in;
                match labels[a] {
                    Label::Blank => {
                        if any_in {
                            labels[a] = Label::Out;
                            changed = true;
                        } else if all_out {
                            labels[a] = Label::In;
                            changed = true;
                        }
                    }
                    Label::In => {
                        if any_in || undec > 0 {
                            return false;
                        }
                        if blank > 0 {
                            for b in fw.attackers_idx(a).iter() {
                                if labels[b] == Label::Blank {
                                    labels[b] = Label::Out;
                                }
                            }
                            changed = true;
                        }
                    }
                    Label::Out => {
                        if !any_in {
                            match blank {
                                0 => return false,
                                1 => {
                                    labels[last_blank] = Label::In;
                                    changed = true;
                                }
                                _ => {}
                            }
                        }
                    }
                    Label::Undec => {
                        if any_in || all_out {
                            return false;
                        }
                        // The lone open attacker can be neither IN (a would be
                        // OUT) nor OUT (a would be IN).
                        if undec == 0 && blank == 1 {
                            if self.stable {
                                return false;
                            }
                            labels[last_blank] = Label::Undec;
                            changed = true;
                        }
                    }
                }
            }
            if !changed {
                return true;
            }
        }
    }
}
