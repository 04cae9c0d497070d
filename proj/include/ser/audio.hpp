#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ser {

// Canonical front-end geometry. Every feature matrix has exactly
// kNumFrames columns, so clips are resampled to kCanonicalRateHz and
// truncated/padded to kCanonicalLength samples before extraction.
inline constexpr int kCanonicalRateHz = 22050;
inline constexpr std::size_t kHopSize = 256;
inline constexpr std::size_t kWindowSize = 2048;
inline constexpr std::size_t kNumFrames = 422;
inline constexpr std::size_t kCanonicalLength = (kNumFrames - 1) * kHopSize;  // 107776

enum class Emotion : int {
  Neutral = 0,
  Calm = 1,
  Happy = 2,
  Sad = 3,
  Angry = 4,
  Fearful = 5,
};

inline constexpr int kNumEmotions = 6;

inline const char* emotion_name(Emotion e) {
  switch (e) {
    case Emotion::Neutral: return "neutral";
    case Emotion::Calm: return "calm";
    case Emotion::Happy: return "happy";
    case Emotion::Sad: return "sad";
    case Emotion::Angry: return "angry";
    case Emotion::Fearful: return "fearful";
  }
  throw std::invalid_argument("emotion_name: bad enum value");
}

inline Emotion emotion_from_index(int index) {
  if (index < 0 || index >= kNumEmotions)
    throw std::invalid_argument("emotion index out of range: " + std::to_string(index));
  return static_cast<Emotion>(index);
}

inline Emotion emotion_from_name(const std::string& name) {
  for (int i = 0; i < kNumEmotions; ++i)
    if (name == emotion_name(static_cast<Emotion>(i))) return static_cast<Emotion>(i);
  throw std::invalid_argument("unknown emotion name: " + name);
}

/// Mono waveform with provenance. Samples are amplitudes in [-1, 1].
struct AudioClip {
  std::vector<double> samples;
  int sample_rate_hz = 0;
  std::string source_id;
  std::optional<Emotion> label;

  double duration_seconds() const {
    return sample_rate_hz > 0 ? static_cast<double>(samples.size()) / sample_rate_hz : 0.0;
  }
};

/// Truncate at the end or zero-pad at the end to exactly `num_samples`.
inline AudioClip fix_length(const AudioClip& clip, std::size_t num_samples) {
  if (clip.samples.empty()) throw std::invalid_argument("fix_length: empty clip");
  AudioClip out = clip;
  out.samples.resize(num_samples, 0.0);
  return out;
}

}  // namespace ser
