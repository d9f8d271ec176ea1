#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "drg/classcount.hpp"
#include "drg/derange.hpp"
#include "drg/fqlin.hpp"

namespace drg::corpus {

/// A transitive action from the bounds corpus.  The designations record which
/// instances are known Frobenius groups of order n(n-1) (AGL(1,q), including
/// S3 = AGL(1,3) and A4 = AGL(1,4)) or n(n-1)/2.
struct BoundCase {
  BoundInstance instance;
  bool designated_nn1 = false;
  bool designated_half = false;
};

struct HallPair {
  std::string name;
  PermGroup ambient;
  PermGroup normal_hall;
};

struct ClassicalSpec {
  Family family;
  std::size_t n;
  unsigned q;
  std::string name() const;
};

struct YoungCase {
  std::size_t n, k;
};

std::vector<BoundCase> bounds();
std::vector<BoundInstance> bound_instances();
/// Explicit coset settings; the Hall-built settings come from hall_pairs().
std::vector<CosetInstance> cosets();
std::vector<HallPair> hall_pairs();
/// Explicit settings plus the ones built from hall_pairs().
std::vector<CosetInstance> cosets_with_hall();
LemmaCorpus structural();
std::vector<ClassicalSpec> classical_small();
std::vector<YoungCase> weyl_young(std::size_t max_n = 10);

/// The names every corpus() call accepts.
const std::vector<std::string>& names();
/// Spec documents describing a corpus; UnknownCorpus for other names.
nlohmann::json describe(const std::string& name);

/// Spec document {"name", "degree", "generators"} for a permutation group.
nlohmann::json group_document(const std::string& name, const PermGroup& group);

} // namespace drg::corpus
