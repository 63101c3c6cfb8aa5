#pragma once

#include "sentmark/text.hpp"
#include "sentmark/textseg.hpp"

#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sentmark {

// Raised when an inference backend cannot serve a request (endpoint down,
// malformed response, context overflow, ...).
class BackendError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Training surface for backends with parameters. Inference-only backends
// (scripted oracles, remote clients) expose none.
class TrainableModel {
public:
    virtual ~TrainableModel() = default;
    virtual std::vector<double>& params() = 0;
    virtual const std::vector<double>& params() const = 0;
    virtual std::vector<double>& grads() = 0;
    virtual void zero_grads() = 0;
};

// Fig. 5-style prompt: "Human: Paraphrase the text below.\n{text}\n..."
// {text} is replaced by the original text when conditioning a paraphraser.
std::string render_prompt(const std::string& prompt_template, const std::string& original);

// One paraphraser policy: next-token distribution over the shared
// vocabulary, conditioned on the original text (through the policy's prompt
// template) and the generated prefix.
class ParaphraserPolicy {
public:
    virtual ~ParaphraserPolicy() = default;

    // Valid probability vector (non-negative, sums to 1 within 1e-6),
    // deterministic for fixed parameters and inputs. Throws on empty
    // original or context overflow.
    virtual std::vector<double> next_token_dist(const Text& original, const Text& prefix) const = 0;

    // Accumulates d(loss)/d(params) given g = d(loss)/d(probabilities) at
    // this context. No-op for backends without parameters.
    virtual void accumulate_grad(const Text& original, const Text& prefix,
                                 std::span<const double> g) {
        (void)original; (void)prefix; (void)g;
    }

    virtual TrainableModel* trainable_model() { return nullptr; }
    bool trainable() { return trainable_model() != nullptr; }

    virtual const Vocabulary& vocab() const = 0;
    virtual const std::string& prompt_template() const = 0;
    virtual std::string backend_id() const = 0;

    virtual std::unique_ptr<ParaphraserPolicy> clone() const = 0;
};

// Per-segment binary classifier theta_d. classify returns the class-1
// probability, strictly inside (0,1).
class SegmentClassifier {
public:
    virtual ~SegmentClassifier() = default;

    virtual double classify(const Segment& segment) const = 0; // throws on empty segment

    // Accumulates d(loss)/d(params) given dprob = d(loss)/d(classify output).
    virtual void accumulate_grad(const Segment& segment, double dprob) {
        (void)segment; (void)dprob;
    }

    virtual TrainableModel* trainable_model() { return nullptr; }
    virtual std::string backend_id() const = 0;
    virtual std::unique_ptr<SegmentClassifier> clone() const = 0;
};

// Text-pair similarity in [0,1]; symmetric, 1 on identical non-empty texts.
class SimilarityScorer {
public:
    virtual ~SimilarityScorer() = default;
    virtual double similarity(const Text& a, const Text& b) const = 0; // throws on empty input
    virtual std::string backend_id() const = 0;
};

// Critic attached to one policy: return-to-go estimate per prefix position.
class ValueHead {
public:
    virtual ~ValueHead() = default;

    // values[t] estimates the return-to-go of the state prefix[0..t); output
    // length equals the prefix token count.
    virtual std::vector<double> values(const Text& original, const Text& prefix) const = 0;

    virtual void accumulate_grad(const Text& original, const Text& prefix,
                                 std::span<const double> dvalues) {
        (void)original; (void)prefix; (void)dvalues;
    }

    virtual TrainableModel* trainable_model() { return nullptr; }
    virtual std::unique_ptr<ValueHead> clone() const = 0;
};

namespace prompts {
// Encoder paraphrase prompt (used by paraphraser backends).
extern const char* kParaphrase;
// Round-trip translation attack prompt; {language} and {text} placeholders.
extern const char* kTranslateAttack;
// Direct paraphrase attack prompt; {text} placeholder.
extern const char* kParaphraseAttack;
// In-context stealthiness judge prompt; {class0}, {class1}, {candidate}.
extern const char* kStealthJudge;
} // namespace prompts

// Pluggable stealthiness judge: given example sentences from both classes,
// guess the class of a candidate sentence. Served by external backends only.
class StealthinessJudge {
public:
    virtual ~StealthinessJudge() = default;
    virtual int judge(const std::vector<std::string>& class0_examples,
                      const std::vector<std::string>& class1_examples,
                      const std::string& candidate) const = 0; // returns 0 or 1
    virtual std::string backend_id() const = 0;
};

} // namespace sentmark
