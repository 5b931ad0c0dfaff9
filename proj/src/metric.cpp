#include "npa/metric.hpp"

#include "npa/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace npa {

namespace {

class NpaCursor final : public LanguageCursor {
 public:
  NpaCursor(std::shared_ptr<const Npa> a, Algebra alg, Configuration cfg)
      : a_(std::move(a)), alg_(alg), cfg_(std::move(cfg)) {}

  Rat weight() const override { return output(*a_, cfg_, alg_); }
  std::unique_ptr<LanguageCursor> advance(SymbolId symbol) const override {
    return std::make_unique<NpaCursor>(a_, alg_, step(*a_, cfg_, symbol));
  }

 private:
  std::shared_ptr<const Npa> a_;
  Algebra alg_;
  Configuration cfg_;
};

class ClosureCursor final : public LanguageCursor {
 public:
  ClosureCursor(std::shared_ptr<const LanguageHandle::Closure> fn, std::vector<SymbolId> prefix)
      : fn_(std::move(fn)), prefix_(std::move(prefix)) {}

  Rat weight() const override { return (*fn_)(prefix_); }
  std::unique_ptr<LanguageCursor> advance(SymbolId symbol) const override {
    auto longer = prefix_;
    longer.push_back(symbol);
    return std::make_unique<ClosureCursor>(fn_, std::move(longer));
  }

 private:
  std::shared_ptr<const LanguageHandle::Closure> fn_;
  std::vector<SymbolId> prefix_;
};

}  // namespace

LanguageHandle LanguageHandle::from_npa(Npa a, Algebra alg) {
  validate_npa(a);
  auto shared = std::make_shared<const Npa>(std::move(a));
  auto alphabet = shared->alphabet;
  return LanguageHandle(std::move(alphabet), [shared, alg]() -> std::unique_ptr<LanguageCursor> {
    return std::make_unique<NpaCursor>(shared, alg, initial_config(*shared));
  });
}

LanguageHandle LanguageHandle::from_closure(Alphabet alphabet, Closure weight) {
  auto fn = std::make_shared<const Closure>(std::move(weight));
  return LanguageHandle(std::move(alphabet), [fn]() -> std::unique_ptr<LanguageCursor> {
    return std::make_unique<ClosureCursor>(fn, std::vector<SymbolId>{});
  });
}

LanguageHandle LanguageHandle::constant(Alphabet alphabet, Rat value) {
  return from_closure(std::move(alphabet), [value](std::span<const SymbolId>) { return value; });
}

Rat LanguageHandle::weight(std::span<const SymbolId> word) const {
  auto cursor = start();
  for (SymbolId s : word) cursor = cursor->advance(s);
  return cursor->weight();
}

void MetricQuery::validate() const {
  if (c < 0 || c >= 1) throw std::invalid_argument("discount c must lie in [0,1), got " + to_string(c));
  if (kappa <= 0) throw std::invalid_argument("precision kappa must be positive, got " + to_string(kappa));
}

std::size_t word_horizon(const MetricQuery& q) {
  q.validate();
  if (q.c == 0) return 1;
  const Rat target = (1 - q.c) * q.kappa;
  std::size_t n = 0;
  Rat power = 1;
  while (power > target) {
    power *= q.c;
    ++n;
  }
  return n;
}

Rat tail_bound(const MetricQuery& q, std::size_t horizon) {
  Rat power = 1;
  for (std::size_t i = 0; i < horizon; ++i) power *= q.c;
  return power / (1 - q.c);
}

MetricReport metric_report(const LanguageHandle& l1, const LanguageHandle& l2, const MetricQuery& q) {
  if (l1.alphabet() != l2.alphabet()) throw AlphabetMismatch("languages are over different alphabets");
  const auto horizon = word_horizon(q);
  const auto symbols = l1.alphabet().size();
  const Rat ratio = q.c / Rat(static_cast<long>(symbols));

  MetricReport report;
  report.horizon = horizon;
  report.tail_bound = tail_bound(q, horizon);
  report.value = 0;

  struct Node {
    std::vector<SymbolId> word;
    std::unique_ptr<LanguageCursor> first, second;
  };
  // Breadth-first over the word trie: length order, then alphabet order.
  std::vector<Node> level;
  if (horizon > 0) level.push_back(Node{{}, l1.start(), l2.start()});
  Rat scale = 1;
  for (std::size_t length = 0; length < horizon; ++length) {
    for (const auto& node : level) {
      WordContribution wc{node.word, node.first->weight(), node.second->weight(), 0, 0};
      wc.difference = abs(wc.weight1 - wc.weight2);
      wc.contribution = wc.difference * scale;
      report.value += wc.contribution;
      report.contributions.push_back(std::move(wc));
    }
    if (length + 1 == horizon) break;
    std::vector<Node> next;
    next.reserve(level.size() * symbols);
    for (const auto& node : level)
      for (SymbolId a = 0; a < symbols; ++a) {
        auto word = node.word;
        word.push_back(a);
        next.push_back(Node{std::move(word), node.first->advance(a), node.second->advance(a)});
      }
    level = std::move(next);
    scale *= ratio;
  }

  std::stable_sort(report.contributions.begin(), report.contributions.end(),
                   [](const WordContribution& x, const WordContribution& y) {
                     return x.contribution > y.contribution;
                   });
  return report;
}

Rat approx_metric(const LanguageHandle& l1, const LanguageHandle& l2, const MetricQuery& q) {
  return metric_report(l1, l2, q).value;
}

std::vector<WordContribution> difference_report(const LanguageHandle& l1, const LanguageHandle& l2,
                                                const MetricQuery& q) {
  return metric_report(l1, l2, q).contributions;
}

}  // namespace npa
