#pragma once

#include <string>
#include <vector>

namespace telemelody {

/// Dense row-major matrix, just enough for the loss math.
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c) {}

  double& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
  double at(int r, int c) const {
    return data[static_cast<std::size_t>(r) * cols + c];
  }

  friend bool operator==(const Mat&, const Mat&) = default;
};

/// Rule-derived alignment between melody feature tokens (rows) and template
/// element tokens (columns). w_hat holds 0/1 flags; w is w_hat with each
/// nonzero row scaled to sum 1.
struct AlignmentMatrix {
  Mat w_hat;
  Mat w;
  int n_notes = 0;

  int rows() const { return w.rows; }  // K = 4 * n_notes
  int cols() const { return w.cols; }  // J = 1 + 3 * n_notes
};

/// Builds the alignment for a melody of n notes. Melody rows per note i:
/// bar 4i, pos 4i+1, pitch 4i+2, dur 4i+3. Template columns: tonality 0,
/// then chord 1+3i, rhythm 2+3i, cadence 3+3i. Alignments:
///   pitch_i  - tonality         (tonality governs the whole pitch range)
///   pitch_i  - chord_i          (harmony constrains the pitch)
///   pos_i    - rhythm_i         (rhythm fixes the beat position)
///   dur_i    - cadence_i        (cadence stretches the duration)
///   pitch_i  - cadence_i        (half vs authentic is pitch-dependent)
///   bar_{i+1}, pos_{i+1} - cadence_i  (the pause shifts the next onset)
/// Throws InvalidSize for n < 1.
AlignmentMatrix build_alignment(int n_notes);

/// Cross-entropy between the normalized alignment and an attention matrix:
///   -(1 / (K*J)) * sum_k sum_j w[k][j] * ln A[k][j]
/// Zero rows of w contribute nothing. Throws ShapeMismatch or
/// NonPositiveAttention (A <= 0 where w > 0).
double attn_loss(const AlignmentMatrix& align, const Mat& attention);

/// Row-wise softmax.
Mat row_softmax(const Mat& logits);

/// Analytic gradient of attn_loss(align, row_softmax(logits)) with respect
/// to the logits: (1/(K*J)) * (rowsum(w) * A - w), row by row.
Mat attn_loss_grad(const AlignmentMatrix& align, const Mat& logits);

struct LossBreakdown {
  double l_nll = 0;
  double l_attn = 0;
  double lambda_attn = 0.05;
  double total = 0;
};

/// total = l_nll + lambda_attn * attn_loss(align, A); lambda must be >= 0.
LossBreakdown total_loss(double l_nll, const AlignmentMatrix& align,
                         const Mat& attention, double lambda_attn = 0.05);

/// Text dump used by golden tests: one row per line, cells space-separated,
/// w_hat as integers and w with six decimals.
std::string alignment_text_dump(const AlignmentMatrix& align);

}  // namespace telemelody
