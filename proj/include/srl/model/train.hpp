#pragma once

#include <iostream>
#include <random>
#include <thread>
#include <vector>

#include "srl/analysis/evaluate.hpp"
#include "srl/model/corpus.hpp"
#include "srl/model/external.hpp"
#include "srl/model/srl_model.hpp"
#include "srl/numerics/optimizer.hpp"

namespace srl {

struct TrainConfig {
  double rho = 0.95;
  double eps = 1e-6;
  double clip_norm = 1.0;
  int batch_size = 80;
  int epochs = 500;
};

struct EpochStats {
  int epoch = 0;
  double train_loss = 0;
  double dev_f1 = 0;
};

struct TrainResult {
  std::vector<EpochStats> history;
  int best_epoch = 0;
  double best_dev_f1 = 0;
};

// Frames for every (sentence, gold predicate) pair, optionally spread over
// several threads. Results are position-stable regardless of the job count.
inline FrameCorpus predict_corpus(const SrlModel& model, const Corpus& corpus,
                                  const ExternalVectors* ext = nullptr, int jobs = 1) {
  FrameCorpus out(corpus.size());
  for (size_t s = 0; s < corpus.size(); ++s) out[s].resize(corpus[s].frames.size());

  std::vector<std::pair<int, int>> work;
  for (size_t s = 0; s < corpus.size(); ++s)
    for (size_t k = 0; k < corpus[s].frames.size(); ++k)
      work.emplace_back(static_cast<int>(s), static_cast<int>(k));

  auto run = [&](size_t begin, size_t end) {
    for (size_t w = begin; w < end; ++w) {
      const auto [s, k] = work[w];
      const CorpusEntry& entry = corpus[s];
      const MatX* vecs = ext ? ext->find(s) : nullptr;
      out[s][k] = model.predict(entry.sentence, entry.tree, entry.frames[k].predicate, vecs);
    }
  };

  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(work.size())));
  if (jobs == 1) {
    run(0, work.size());
  } else {
    std::vector<std::thread> threads;
    const size_t chunk = (work.size() + jobs - 1) / jobs;
    for (int j = 0; j < jobs; ++j) {
      const size_t begin = j * chunk;
      const size_t end = std::min(work.size(), begin + chunk);
      if (begin < end) threads.emplace_back(run, begin, end);
    }
    for (auto& t : threads) t.join();
  }
  return out;
}

inline double dev_span_f1(const SrlModel& model, const Corpus& dev,
                          const ExternalVectors* ext = nullptr) {
  return evaluate(gold_frames(dev), predict_corpus(model, dev, ext)).f1;
}

// Mini-batch Adadelta training with gradient clipping. Model selection keeps
// the epoch with the best dev span F1 (the training set doubles as dev when
// no dev corpus is given); those parameters are restored before returning.
// Deterministic for a fixed rng state.
inline TrainResult train(SrlModel& model, const Corpus& train_corpus, const Corpus& dev_corpus,
                         const TrainConfig& config, Rng& rng, std::ostream* log = nullptr,
                         const ExternalVectors* train_ext = nullptr,
                         const ExternalVectors* dev_ext = nullptr) {
  if (train_corpus.empty()) throw DataError("train: empty corpus");
  const Corpus& dev = dev_corpus.empty() ? train_corpus : dev_corpus;
  const ExternalVectors* dev_vectors = dev_corpus.empty() ? train_ext : dev_ext;

  std::vector<std::pair<int, int>> instances;
  for (size_t s = 0; s < train_corpus.size(); ++s)
    for (size_t k = 0; k < train_corpus[s].frames.size(); ++k)
      instances.emplace_back(static_cast<int>(s), static_cast<int>(k));
  if (instances.empty()) throw DataError("train: corpus has no predicates");

  TrainResult result;
  result.best_dev_f1 = -1;
  std::vector<MatX> best_values = model.store().snapshot_values();

  for (int epoch = 1; epoch <= config.epochs; ++epoch) {
    std::shuffle(instances.begin(), instances.end(), rng);
    double epoch_loss = 0;
    for (size_t at = 0; at < instances.size(); at += config.batch_size) {
      const size_t stop = std::min(instances.size(), at + config.batch_size);
      model.store().zero_grads();
      for (size_t w = at; w < stop; ++w) {
        const auto [s, k] = instances[w];
        const CorpusEntry& entry = train_corpus[s];
        const MatX* vecs = train_ext ? train_ext->find(s) : nullptr;
        Tape tape;
        Var loss = model.loss(tape, entry.sentence, entry.tree, entry.frames[k].predicate,
                              model.gold_tag_ids(entry.frames[k], entry.sentence.size()), vecs);
        epoch_loss += tape.value(loss)(0, 0);
        tape.backward(loss);
      }
      model.store().scale_grads(1.0 / static_cast<double>(stop - at));
      clip_global_norm(model.store(), config.clip_norm);
      adadelta_step(model.store(), config.rho, config.eps);
    }
    epoch_loss /= static_cast<double>(instances.size());

    const double f1 = dev_span_f1(model, dev, dev_vectors);
    result.history.push_back({epoch, epoch_loss, f1});
    if (f1 > result.best_dev_f1) {
      result.best_dev_f1 = f1;
      result.best_epoch = epoch;
      best_values = model.store().snapshot_values();
    }
    if (log)
      *log << "epoch " << epoch << " loss " << epoch_loss << " dev_f1 " << f1 << '\n';
  }

  model.store().restore_values(best_values);
  return result;
}

}  // namespace srl
