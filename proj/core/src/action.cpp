#include "cubemedian/action.hpp"

#include <algorithm>

#include "cubemedian/errors.hpp"

namespace cubemedian {

ProductIsometry AbelianAction::evaluate(const std::vector<long long>& word) const {
  if (word.size() != generators.size())
    throw Error(ErrorCode::InvalidDocument, "word length differs from generator count");
  ProductIsometry acc = identity_isometry(complex);
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (word[i] == 0) continue;
    acc = compose(acc, power(generators[i], word[i]));
  }
  return acc;
}

AbelianAction build_action(ProductComplexPtr complex, std::vector<std::string> names,
                           std::vector<ProductIsometry> generators) {
  if (names.size() != generators.size())
    throw Error(ErrorCode::InvalidDocument, "generator names and maps differ in count");
  if (generators.empty())
    throw Error(ErrorCode::InvalidDocument, "action needs at least one generator");
  for (const auto& g : generators)
    if (g.complex != complex)
      throw Error(ErrorCode::MismatchedComplex, "generator acts on a different complex");
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t j = i + 1; j < generators.size(); ++j)
      if (!commute(generators[i], generators[j]))
        throw Error(ErrorCode::NotCommuting,
                    "generators '" + names[i] + "' and '" + names[j] + "' do not commute");
  return AbelianAction{std::move(complex), std::move(names), std::move(generators)};
}

SubdividedAction subdivide_action(const AbelianAction& a) {
  SubdividedProduct sub = subdivide_complex(a.complex);
  std::vector<ProductIsometry> gens;
  gens.reserve(a.generators.size());
  for (const auto& g : a.generators) gens.push_back(sub.transport(g));
  AbelianAction act{sub.complex, a.generator_names, std::move(gens)};
  return SubdividedAction{std::move(sub), std::move(act)};
}

WordList default_word_sample(int generator_count, int max_exp) {
  double count = 1;
  for (int i = 0; i < generator_count; ++i) count *= (2 * max_exp + 1);
  if (count > 20000)
    throw Error(ErrorCode::TooLarge, "default word sample too large; pass words explicitly");
  WordList out;
  std::vector<long long> w(generator_count, -max_exp);
  while (true) {
    if (std::any_of(w.begin(), w.end(), [](long long x) { return x != 0; }))
      out.push_back(w);
    int i = generator_count - 1;
    while (i >= 0) {
      if (++w[i] <= max_exp) break;
      w[i] = -max_exp;
      --i;
    }
    if (i < 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void require_nonzero_words(const WordList& words, std::size_t gens) {
  for (const auto& w : words) {
    if (w.size() != gens)
      throw Error(ErrorCode::InvalidDocument, "word length differs from generator count");
    if (std::all_of(w.begin(), w.end(), [](long long x) { return x == 0; }))
      throw Error(ErrorCode::InvalidDocument, "sample contains the zero word");
  }
}

std::vector<long long> scale_word(const std::vector<long long>& w, long long m) {
  std::vector<long long> out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = m * w[i];
  return out;
}

std::vector<long long> add_words(const std::vector<long long>& a,
                                 const std::vector<long long>& b) {
  std::vector<long long> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

}  // namespace

FreenessVerdict check_freeness(const AbelianAction& a, const WordList& words) {
  require_nonzero_words(words, a.generators.size());
  SubdividedAction sub = subdivide_action(a);
  FreenessVerdict verdict;
  for (const auto& w : words) {
    ProductIsometry g = sub.action.evaluate(w);
    if (bounded_orbits(g)) {
      // stabilized cube of the original complex, via a fixed subdivided vertex
      if (translation_length(g) != 0)
        throw Error(ErrorCode::Internal,
                    "bounded transported word without a fixed subdivision vertex");
      verdict.free_on_sample = false;
      verdict.counterexamples.push_back(
          FreenessCounterexample{w, decode_subdivision_cube(sub.subdivision, min_witness(g))});
      continue;
    }
    // After subdivision nothing may invert.
    if (!is_loxodromic(g))
      throw Error(ErrorCode::Internal, "transported word classifies as inverting");
  }
  return verdict;
}

DiscreteNormReport certify_discrete_norm(const AbelianAction& a, const WordList& words,
                                         long long power_cap) {
  FreenessVerdict freeness = check_freeness(a, words);
  if (!freeness.free_on_sample) {
    std::string msg = "action is not free on the sample; stabilized cube for word (";
    const auto& w = freeness.counterexamples.front().word;
    for (std::size_t i = 0; i < w.size(); ++i)
      msg += (i ? "," : "") + std::to_string(w[i]);
    throw Error(ErrorCode::NotFreeOnSample, msg + ")");
  }

  SubdividedAction sub = subdivide_action(a);
  DiscreteNormReport rep;
  rep.generator_names = a.generator_names;
  rep.power_cap = power_cap;

  WordList sample = words;
  std::sort(sample.begin(), sample.end());
  sample.erase(std::unique(sample.begin(), sample.end()), sample.end());

  auto nu = [&](const std::vector<long long>& w) {
    return translation_length(sub.action.evaluate(w));
  };

  for (const auto& w : sample) {
    BigInt value = nu(w);
    rep.samples.push_back({w, value});
    if (value < 1) {
      rep.positivity_ok = false;
      rep.positivity_violations.push_back(w);
    }
  }

  // Homogeneity as an integer identity per word and power.
  for (const auto& w : sample) {
    BigInt base = nu(w);
    for (long long m = -power_cap; m <= power_cap; ++m) {
      BigInt actual = nu(scale_word(w, m));
      BigInt expected = BigInt(m < 0 ? -m : m) * base;
      ++rep.homogeneity_checked;
      if (actual != expected) {
        rep.homogeneity_ok = false;
        rep.homogeneity_violations.push_back(HomogeneityViolation{w, m, expected, actual});
      }
    }
  }

  // Subadditivity through the power trick, pair by pair.
  for (std::size_t i = 0; i < sample.size(); ++i) {
    for (std::size_t j = i + 1; j < sample.size(); ++j) {
      SubadditivityRecord rec;
      rec.left = sample[i];
      rec.right = sample[j];
      rec.nu_left = nu(sample[i]);
      rec.nu_right = nu(sample[j]);
      rec.nu_sum = nu(add_words(sample[i], sample[j]));

      // Find m with Min g and Min h^m intersecting, preferring the original
      // complex where both words act loxodromically.
      ProductIsometry g0 = a.evaluate(sample[i]);
      ProductIsometry h0 = a.evaluate(sample[j]);
      CommonPowerResult cp;
      ProductVertex witness_sub;
      if (is_loxodromic(g0) && is_loxodromic(h0)) {
        cp = common_min_power(g0, h0, default_max_power(h0));
        if (cp.found) witness_sub = sub.subdivision.embed(*cp.witness);
        rec.searched_on_original = true;
      } else {
        ProductIsometry g1 = sub.action.evaluate(sample[i]);
        ProductIsometry h1 = sub.action.evaluate(sample[j]);
        cp = common_min_power(g1, h1, default_max_power(h1));
        if (cp.found) witness_sub = *cp.witness;
        rec.searched_on_original = false;
      }
      if (!cp.found) {
        rec.power_search_failed = true;
        rep.power_search_failures.push_back({sample[i], sample[j]});
        rep.pairs.push_back(std::move(rec));
        continue;
      }
      rec.m = cp.m;
      rec.witness = witness_sub;

      // |m| nu(g+h) = nu(h^m g^m) <= nu(h^m) + nu(g^m) = |m| (nu(g) + nu(h)),
      // with the middle bound evaluated at x, g^m x, h^m g^m x.
      const long long m = cp.m;
      ProductIsometry gm = power(sub.action.evaluate(sample[i]), m);
      ProductIsometry hm = power(sub.action.evaluate(sample[j]), m);
      rec.lhs = BigInt(m) * rec.nu_sum;
      BigInt nu_hmgm = nu(scale_word(add_words(sample[i], sample[j]), m));
      rec.at_witness = displacement(witness_sub, compose(hm, gm));
      rec.leg_left = displacement(witness_sub, gm);
      ProductVertex mid = apply(gm, witness_sub);
      rec.leg_right = displacement(mid, hm);
      rec.rhs = BigInt(m) * (rec.nu_left + rec.nu_right);

      rec.ok = rec.lhs == nu_hmgm && nu_hmgm <= rec.at_witness &&
               rec.at_witness <= rec.leg_left + rec.leg_right &&
               rec.leg_left == BigInt(m) * rec.nu_left &&
               rec.leg_right == BigInt(m) * rec.nu_right &&
               rec.leg_left + rec.leg_right == rec.rhs && rec.nu_sum <= rec.nu_left + rec.nu_right;
      if (!rec.ok) rep.subadditivity_ok = false;
      rep.pairs.push_back(std::move(rec));
    }
  }
  return rep;
}

}  // namespace cubemedian
