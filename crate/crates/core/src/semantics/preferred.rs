//! Preferred extensions as maximal admissible sets.
//!
//! Branches each open argument between IN and excluded, rather than
//! enumerating every complete labelling, which explodes on large frameworks
//! where most labellings differ only in UNDEC placement. Attackers of the
//! IN set are tracked as MUST_OUT until some IN argument attacks them; a
//! MUST_OUT argument with no remaining candidate attacker kills the branch.

use super::grounded_set;
use crate::bitset::ArgSet;
use crate::framework::ArgumentationFramework;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Label {
    Blank,
    In,
    /// Attacked by the IN set.
    Out,
    /// Attacks the IN set and is not yet attacked by it.
    MustOut,
    /// Excluded from the IN set but not attacked by it.
    Undec,
}

pub(super) fn preferred(framework: &ArgumentationFramework) -> Vec<ArgSet> {
    let n = framework.len();
    let self_attacking: Vec<bool> = (0..n).map(|a| framework.attackers_idx(a).contains(a)).collect();
    let mut search = Search {
        framework,
        self_attacking,
        found: Vec::new(),
    };
    let mut labels: Vec<Label> = search
        .self_attacking
        .iter()
        .map(|&s| if s { Label::Undec } else { Label::Blank })
        .collect();
    // Every preferred extension contains the grounded one.
    for a in grounded_set(framework).iter() {
        if labels[a] == Label::Blank {
            search.set_in(&mut labels, a);
        }
    }
    if search.propagate(&mut labels) {
        search.branch(labels);
    }
    search.found
}

struct Search<'a> {
    framework: &'a ArgumentationFramework,
    self_attacking: Vec<bool>,
    found: Vec<ArgSet>,
}

impl Search<'_> {
    fn candidate(&self, labels: &[Label], a: usize) -> bool {
        labels[a] == Label::Blank && !self.self_attacking[a]
    }

    fn set_in(&self, labels: &mut [Label], a: usize) {
        labels[a] = Label::In;
        for t in self.framework.targets_idx(a).iter() {
            labels[t] = Label::Out;
        }
        for z in self.framework.attackers_idx(a).iter() {
            if labels[z] != Label::Out {
                labels[z] = Label::MustOut;
            }
        }
    }

    /// False if some attacker of the IN set can no longer be countered.
    /// Also excludes open arguments that could never be defended.
    fn propagate(&self, labels: &mut [Label]) -> bool {
        let fw = self.framework;
        loop {
            let mut changed = false;
            for a in 0..labels.len() {
                match labels[a] {
                    Label::MustOut => {
                        if !fw.attackers_idx(a).iter().any(|w| self.candidate(labels, w)) {
                            return false;
                        }
                    }
                    Label::Blank => {
                        let hopeless = fw.attackers_idx(a).iter().any(|z| {
                            labels[z] != Label::Out && !fw.attackers_idx(z).iter().any(|w| self.candidate(labels, w))
                        });
                        if hopeless {
                            labels[a] = Label::Undec;
                            changed = true;
                        }
                    }
                    _ => {}
                }
            }
            if !changed {
                return true;
            }
        }
    }

    fn covered_by_found(&self, labels: &[Label]) -> bool {
        let reachable = collect(labels, |l| matches!(l, Label::In | Label::Blank));
        self.found.iter().any(|f| reachable.is_subset(f))
    }

    fn pick(&self, labels: &[Label]) -> Option<usize> {
        // Prefer an argument that can counter a pending attacker.
        let fw = self.framework;
        let urgent = (0..labels.len())
            .filter(|&z| labels[z] == Label::MustOut)
            .flat_map(|z| fw.attackers_idx(z).iter())
            .find(|&w| self.candidate(labels, w));
        urgent.or_else(|| (0..labels.len()).find(|&a| labels[a] == Label::Blank))
    }

    fn branch(&mut self, labels: Vec<Label>) {
        if self.covered_by_found(&labels) {
            return;
        }
        let Some(a) = self.pick(&labels) else {
            self.record(&labels);
            return;
        };
        if !self.self_attacking[a] {
            let mut with = labels.clone();
            self.set_in(&mut with, a);
            if self.propagate(&mut with) {
                self.branch(with);
            }
        }
        let mut without = labels;
        without[a] = Label::Undec;
        if self.propagate(&mut without) {
            self.branch(without);
        }
    }

    fn record(&mut self, labels: &[Label]) {
        if labels.contains(&Label::MustOut) {
            return;
        }
        let set = collect(labels, |l| l == Label::In);
        if self.found.iter().any(|f| set.is_subset(f)) {
            return;
        }
        self.found.retain(|f| !f.is_subset(&set));
        self.found.push(set);
    }
}

fn collect(labels: &[Label], keep: impl Fn(Label) -> bool) -> ArgSet {
    let mut set = ArgSet::empty(labels.len());
    for (i, l) in labels.iter().enumerate() {
        if keep(*l) {
            set.insert(i);
        }
    }
    set
}
