#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "detoxeval/lang.hpp"
#include "detoxeval/lexicon.hpp"

namespace detoxeval::metrics {

struct ChrfConfig {
    int max_char_order = 6;
    double beta = 1.0;
    bool strip_whitespace = true;
    double epsilon = 1e-16;
};

// Sentence-level character n-gram F-score. Per order n = 1..max_char_order
// with at least one hypothesis or reference n-gram: clipped precision and
// recall; both are macro-averaged over those orders and combined into
// F_beta = (1+b^2)*P*R / (b^2*P + R). Score is the max over references.
double chrf1(const std::string& hypothesis, const std::vector<std::string>& references,
             const ChrfConfig& cfg = {});

// Cosine similarity clamped into [0, 1]. Throws on dimension mismatch or a
// zero vector.
double cosine_sim(const std::vector<double>& a, const std::vector<double>& b);

// Probability that a text is non-toxic.
class StyleScorer {
  public:
    virtual ~StyleScorer() = default;
    virtual std::vector<double> score(const std::vector<std::string>& texts, Lang lang) = 0;
    virtual std::string describe() const = 0;
};

// Offline fallback: 1.0 when the lexicon finds nothing, else 0.0.
class LexiconStyleScorer : public StyleScorer {
  public:
    explicit LexiconStyleScorer(std::shared_ptr<const Lexicon> lexicon)
        : lexicon_(std::move(lexicon)) {}
    std::vector<double> score(const std::vector<std::string>& texts, Lang lang) override;
    std::string describe() const override { return "lexicon-fallback"; }

  private:
    std::shared_ptr<const Lexicon> lexicon_;
};

// Thresholds another scorer's probabilities at 0.5 into {0, 1}.
class BinarizedStyleScorer : public StyleScorer {
  public:
    explicit BinarizedStyleScorer(std::shared_ptr<StyleScorer> inner) : inner_(std::move(inner)) {}
    std::vector<double> score(const std::vector<std::string>& texts, Lang lang) override;
    std::string describe() const override { return inner_->describe() + "+binarized@0.5"; }

  private:
    std::shared_ptr<StyleScorer> inner_;
};

struct ScoreTriple {
    double sta = 0.0;
    double sim = 0.0;
    double chrf = 0.0;
    double j = 0.0;  // always sta * sim * chrf
};

ScoreTriple make_triple(double sta, double sim, double chrf);

// J = (1/n) * sum of sta*sim*chrf, accumulated in sample order.
double joint_score(const std::vector<ScoreTriple>& triples);

enum class EditOp { match, substitute, erase, insert };

struct EditTrace {
    std::size_t distance = 0;
    std::vector<EditOp> ops;  // one optimal alignment path
};

std::size_t levenshtein(const std::vector<std::string>& a, const std::vector<std::string>& b);

// Backtrace preference at equal cost: substitute, then erase, then insert.
EditTrace levenshtein_trace(const std::vector<std::string>& a, const std::vector<std::string>& b);

}  // namespace detoxeval::metrics
