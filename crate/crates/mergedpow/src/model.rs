//! Domain types shared by every other module: block-type specifications,
//! blockrate configurations, hashing-resource parameters, and the scored
//! block tree with its fork-choice query.
//!
//! A chain's score is the sum of the score constants of its non-genesis
//! blocks, and the fork-choice rule picks the visible tip of maximal
//! cumulative score.

use crate::error::{Error, Result};

/// Identifier of a block inside one [`BlockTree`]. The genesis block is
/// always [`GENESIS`].
pub type BlockId = usize;

/// Id of the genesis block in every tree.
pub const GENESIS: BlockId = 0;

/// One hash type: its score constant (points/block) and the honest and
/// adversary blockrates (blocks/second).
#[derive(Debug, Clone, PartialEq)]
pub struct BlockTypeSpec {
    /// 1-based type index; contiguous within a configuration.
    pub index: usize,
    /// Score constant, points per block. Strictly positive.
    pub score: f64,
    /// Honest blockrate, blocks per second.
    pub honest_rate: f64,
    /// Adversary blockrate, blocks per second.
    pub adversary_rate: f64,
}

impl BlockTypeSpec {
    pub fn new(index: usize, score: f64, honest_rate: f64, adversary_rate: f64) -> Result<Self> {
        if !score.is_finite() || score <= 0.0 {
            return Err(Error::invalid("score", format!("must be positive, got {score}")));
        }
        if !honest_rate.is_finite() || honest_rate < 0.0 {
            return Err(Error::invalid(
                "honest_rate",
                format!("must be nonnegative, got {honest_rate}"),
            ));
        }
        if !adversary_rate.is_finite() || adversary_rate < 0.0 {
            return Err(Error::invalid(
                "adversary_rate",
                format!("must be nonnegative, got {adversary_rate}"),
            ));
        }
        Ok(BlockTypeSpec {
            index,
            score,
            honest_rate,
            adversary_rate,
        })
    }
}

/// A full blockrate configuration: the ordered block types plus the network
/// delay bound Δ (seconds).
#[derive(Debug, Clone, PartialEq)]
pub struct BlockrateConfiguration {
    types: Vec<BlockTypeSpec>,
    delta: f64,
}

impl BlockrateConfiguration {
    /// Builds a configuration from explicit type specs. Type indices must be
    /// contiguous starting at 1, in order.
    pub fn new(types: Vec<BlockTypeSpec>, delta: f64) -> Result<Self> {
        if types.is_empty() {
            return Err(Error::invalid("types", "at least one block type is required"));
        }
        for (pos, ty) in types.iter().enumerate() {
            if ty.index != pos + 1 {
                return Err(Error::invalid(
                    "types",
                    format!("type at position {pos} has index {}, expected {}", ty.index, pos + 1),
                ));
            }
        }
        if !delta.is_finite() || delta < 0.0 {
            return Err(Error::invalid("delta", format!("must be nonnegative, got {delta}")));
        }
        Ok(BlockrateConfiguration { types, delta })
    }

    /// Convenience constructor from parallel rate/score slices.
    pub fn from_rates(honest: &[f64], adversary: &[f64], scores: &[f64], delta: f64) -> Result<Self> {
        if honest.len() != scores.len() || adversary.len() != scores.len() {
            return Err(Error::invalid(
                "types",
                format!(
                    "rate/score lists must have equal length (h: {}, b: {}, c: {})",
                    honest.len(),
                    adversary.len(),
                    scores.len()
                ),
            ));
        }
        let types = honest
            .iter()
            .zip(adversary)
            .zip(scores)
            .enumerate()
            .map(|(pos, ((&h, &b), &c))| BlockTypeSpec::new(pos + 1, c, h, b))
            .collect::<Result<Vec<_>>>()?;
        BlockrateConfiguration::new(types, delta)
    }

    pub fn types(&self) -> &[BlockTypeSpec] {
        &self.types
    }

    pub fn num_types(&self) -> usize {
        self.types.len()
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    /// Same types with a different delay bound.
    pub fn with_delta(&self, delta: f64) -> Result<Self> {
        BlockrateConfiguration::new(self.types.clone(), delta)
    }

    /// Honest and adversary blockrates swapped, types and delta unchanged.
    pub fn swap_roles(&self) -> Self {
        let types = self
            .types
            .iter()
            .map(|t| BlockTypeSpec {
                index: t.index,
                score: t.score,
                honest_rate: t.adversary_rate,
                adversary_rate: t.honest_rate,
            })
            .collect();
        BlockrateConfiguration {
            types,
            delta: self.delta,
        }
    }

    pub fn scores(&self) -> Vec<f64> {
        self.types.iter().map(|t| t.score).collect()
    }

    pub fn honest_rates(&self) -> Vec<f64> {
        self.types.iter().map(|t| t.honest_rate).collect()
    }

    pub fn adversary_rates(&self) -> Vec<f64> {
        self.types.iter().map(|t| t.adversary_rate).collect()
    }

    /// Adversary fraction b_i / (h_i + b_i) for the 1-based type index.
    /// `None` when both rates are zero (the fraction is undefined).
    pub fn beta(&self, index: usize) -> Option<f64> {
        let ty = self.types.get(index.checked_sub(1)?)?;
        let total = ty.honest_rate + ty.adversary_rate;
        if total > 0.0 {
            Some(ty.adversary_rate / total)
        } else {
            None
        }
    }
}

/// Hashing-resource view of one type: hashrates (hashes/second), the
/// difficulty (hashes/block) and the cost per hash (dollars/hash).
/// Blockrates derive as hashrate / difficulty.
#[derive(Debug, Clone, PartialEq)]
pub struct HashResourceSpec {
    pub hashrate_honest: f64,
    pub hashrate_adversary: f64,
    pub difficulty: f64,
    pub cost_per_hash: f64,
}

impl HashResourceSpec {
    pub fn new(
        hashrate_honest: f64,
        hashrate_adversary: f64,
        difficulty: f64,
        cost_per_hash: f64,
    ) -> Result<Self> {
        if !difficulty.is_finite() || difficulty <= 0.0 {
            return Err(Error::invalid(
                "difficulty",
                format!("must be positive, got {difficulty}"),
            ));
        }
        if !hashrate_honest.is_finite() || hashrate_honest < 0.0 {
            return Err(Error::invalid(
                "hashrate_honest",
                format!("must be nonnegative, got {hashrate_honest}"),
            ));
        }
        if !hashrate_adversary.is_finite() || hashrate_adversary < 0.0 {
            return Err(Error::invalid(
                "hashrate_adversary",
                format!("must be nonnegative, got {hashrate_adversary}"),
            ));
        }
        if !cost_per_hash.is_finite() || cost_per_hash < 0.0 {
            return Err(Error::invalid(
                "cost_per_hash",
                format!("must be nonnegative, got {cost_per_hash}"),
            ));
        }
        Ok(HashResourceSpec {
            hashrate_honest,
            hashrate_adversary,
            difficulty,
            cost_per_hash,
        })
    }

    /// h = q^h / d, blocks per second.
    pub fn honest_blockrate(&self) -> f64 {
        self.hashrate_honest / self.difficulty
    }

    /// b = q^a / d, blocks per second.
    pub fn adversary_blockrate(&self) -> f64 {
        self.hashrate_adversary / self.difficulty
    }
}

/// A mined block. The genesis block has id 0, time 0, score 0 and no parent.
#[derive(Debug, Clone, PartialEq)]
pub struct Block {
    pub id: BlockId,
    /// Zero-based position of the block's type in the configuration.
    pub type_index: usize,
    /// Arrival time in seconds; strictly after the parent's arrival.
    pub arrival_time: f64,
    /// Parent block; `None` only for genesis.
    pub parent: Option<BlockId>,
    /// Score carried by this block. May differ from the type's constant
    /// when a score-rewriting process has been applied.
    pub score: f64,
}

struct Node {
    block: Block,
    cumulative: f64,
}

/// Genesis-rooted block tree with cumulative chain scores.
///
/// Cumulative scores are maintained on insert, so fork choice and chain
/// score queries never re-walk parent links.
pub struct BlockTree {
    nodes: Vec<Node>,
}

impl BlockTree {
    /// A tree containing only the genesis block (time 0, score 0).
    pub fn new() -> Self {
        BlockTree {
            nodes: vec![Node {
                block: Block {
                    id: GENESIS,
                    type_index: 0,
                    arrival_time: 0.0,
                    parent: None,
                    score: 0.0,
                },
                cumulative: 0.0,
            }],
        }
    }

    /// Total number of blocks including genesis.
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        false // genesis is always present
    }

    pub fn block(&self, id: BlockId) -> Option<&Block> {
        self.nodes.get(id).map(|n| &n.block)
    }

    /// Appends a block under `parent` and returns its id.
    pub fn insert(
        &mut self,
        type_index: usize,
        arrival_time: f64,
        parent: BlockId,
        score: f64,
    ) -> Result<BlockId> {
        let parent_node = self.nodes.get(parent).ok_or(Error::UnknownBlock(parent))?;
        if !score.is_finite() || score <= 0.0 {
            return Err(Error::invalid("score", format!("must be positive, got {score}")));
        }
        // Strictly-after in the continuous model; equality is tolerated for
        // the measure-zero case of simultaneous floating-point arrivals,
        // which the trace's sequence order already disambiguates.
        if !arrival_time.is_finite() || arrival_time < parent_node.block.arrival_time {
            return Err(Error::invalid(
                "arrival_time",
                format!(
                    "must not precede parent time {} (got {arrival_time})",
                    parent_node.block.arrival_time
                ),
            ));
        }
        let id = self.nodes.len();
        let cumulative = parent_node.cumulative + score;
        self.nodes.push(Node {
            block: Block {
                id,
                type_index,
                arrival_time,
                parent: Some(parent),
                score,
            },
            cumulative,
        });
        Ok(id)
    }

    /// Cumulative score from genesis to `tip` (genesis scores 0).
    pub fn chain_score(&self, tip: BlockId) -> Result<f64> {
        self.nodes
            .get(tip)
            .map(|n| n.cumulative)
            .ok_or(Error::UnknownBlock(tip))
    }

    /// Number of non-genesis blocks on the path from genesis to `tip`.
    pub fn chain_length(&self, tip: BlockId) -> Result<usize> {
        let mut len = 0;
        let mut cur = self.nodes.get(tip).ok_or(Error::UnknownBlock(tip))?;
        while let Some(parent) = cur.block.parent {
            len += 1;
            cur = &self.nodes[parent];
        }
        Ok(len)
    }

    /// Fork choice: the id of the block with maximal cumulative score among
    /// blocks with `arrival_time <= visible_before`. Ties break toward the
    /// earliest arrival time, then the smallest id. Genesis is always
    /// visible, so there is always an answer; `f64::INFINITY` means the
    /// whole tree is visible.
    pub fn best_chain_tip(&self, visible_before: f64) -> BlockId {
        let mut best = GENESIS;
        for id in 1..self.nodes.len() {
            if self.nodes[id].block.arrival_time <= visible_before && self.prefer(id, best) {
                best = id;
            }
        }
        best
    }

    /// True when `a` beats `b` under the fork-choice order.
    pub(crate) fn prefer(&self, a: BlockId, b: BlockId) -> bool {
        let (na, nb) = (&self.nodes[a], &self.nodes[b]);
        if na.cumulative != nb.cumulative {
            return na.cumulative > nb.cumulative;
        }
        if na.block.arrival_time != nb.block.arrival_time {
            return na.block.arrival_time < nb.block.arrival_time;
        }
        a < b
    }

    /// Blocks from genesis to `tip`, genesis first.
    pub fn chain(&self, tip: BlockId) -> Result<Vec<&Block>> {
        let mut path = Vec::new();
        let mut cur = self.nodes.get(tip).ok_or(Error::UnknownBlock(tip))?;
        loop {
            path.push(&cur.block);
            match cur.block.parent {
                Some(p) => cur = &self.nodes[p],
                None => break,
            }
        }
        path.reverse();
        Ok(path)
    }

    pub fn blocks(&self) -> impl Iterator<Item = &Block> {
        self.nodes.iter().map(|n| &n.block)
    }
}

impl Default for BlockTree {
    fn default() -> Self {
        BlockTree::new()
    }
}
