#include "telemelody/align.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "telemelody/errors.hpp"

namespace telemelody {

AlignmentMatrix build_alignment(int n_notes) {
  if (n_notes < 1) throw InvalidSize("alignment needs at least one note");

  const int K = 4 * n_notes;
  const int J = 1 + 3 * n_notes;
  AlignmentMatrix out;
  out.n_notes = n_notes;
  out.w_hat = Mat(K, J);

  const int ton = 0;
  for (int i = 0; i < n_notes; ++i) {
    const int bar_row = 4 * i;
    const int pos_row = 4 * i + 1;
    const int pitch_row = 4 * i + 2;
    const int dur_row = 4 * i + 3;
    const int chord_col = 1 + 3 * i;
    const int rhy_col = 2 + 3 * i;
    const int cad_col = 3 + 3 * i;

    out.w_hat.at(pitch_row, ton) = 1;
    out.w_hat.at(pitch_row, chord_col) = 1;
    out.w_hat.at(pos_row, rhy_col) = 1;
    out.w_hat.at(dur_row, cad_col) = 1;
    out.w_hat.at(pitch_row, cad_col) = 1;
    if (i + 1 < n_notes) {
      out.w_hat.at(bar_row + 4, cad_col) = 1;
      out.w_hat.at(pos_row + 4, cad_col) = 1;
    }
  }

  out.w = out.w_hat;
  for (int k = 0; k < K; ++k) {
    double sum = 0;
    for (int j = 0; j < J; ++j) sum += out.w.at(k, j);
    if (sum > 0)
      for (int j = 0; j < J; ++j) out.w.at(k, j) /= sum;
  }
  return out;
}

double attn_loss(const AlignmentMatrix& align, const Mat& attention) {
  const Mat& w = align.w;
  if (attention.rows != w.rows || attention.cols != w.cols)
    throw ShapeMismatch("attention must be " + std::to_string(w.rows) + "x" +
                        std::to_string(w.cols));
  double acc = 0;
  for (int k = 0; k < w.rows; ++k) {
    for (int j = 0; j < w.cols; ++j) {
      const double wv = w.at(k, j);
      if (wv == 0) continue;
      const double a = attention.at(k, j);
      if (a <= 0)
        throw NonPositiveAttention("attention is not positive at an aligned cell");
      acc += wv * std::log(a);
    }
  }
  return -acc / (static_cast<double>(w.rows) * w.cols);
}

Mat row_softmax(const Mat& logits) {
  Mat out(logits.rows, logits.cols);
  for (int r = 0; r < logits.rows; ++r) {
    double mx = -1e300;
    for (int c = 0; c < logits.cols; ++c) mx = std::max(mx, logits.at(r, c));
    double sum = 0;
    for (int c = 0; c < logits.cols; ++c) {
      out.at(r, c) = std::exp(logits.at(r, c) - mx);
      sum += out.at(r, c);
    }
    for (int c = 0; c < logits.cols; ++c) out.at(r, c) /= sum;
  }
  return out;
}

Mat attn_loss_grad(const AlignmentMatrix& align, const Mat& logits) {
  const Mat& w = align.w;
  if (logits.rows != w.rows || logits.cols != w.cols)
    throw ShapeMismatch("logits must be " + std::to_string(w.rows) + "x" +
                        std::to_string(w.cols));
  const Mat a = row_softmax(logits);
  const double scale = 1.0 / (static_cast<double>(w.rows) * w.cols);

  Mat grad(w.rows, w.cols);
  for (int k = 0; k < w.rows; ++k) {
    double row_sum = 0;
    for (int j = 0; j < w.cols; ++j) row_sum += w.at(k, j);
    if (row_sum == 0) continue;  // unaligned rows are constant in the loss
    for (int j = 0; j < w.cols; ++j)
      grad.at(k, j) = scale * (row_sum * a.at(k, j) - w.at(k, j));
  }
  return grad;
}

LossBreakdown total_loss(double l_nll, const AlignmentMatrix& align,
                         const Mat& attention, double lambda_attn) {
  if (lambda_attn < 0) throw Error("lambda_attn must be nonnegative");
  LossBreakdown out;
  out.l_nll = l_nll;
  out.lambda_attn = lambda_attn;
  out.l_attn = attn_loss(align, attention);
  out.total = l_nll + lambda_attn * out.l_attn;
  return out;
}

std::string alignment_text_dump(const AlignmentMatrix& align) {
  std::string out;
  for (int k = 0; k < align.w_hat.rows; ++k) {
    for (int j = 0; j < align.w_hat.cols; ++j) {
      if (j) out.push_back(' ');
      out += std::to_string(static_cast<int>(align.w_hat.at(k, j)));
    }
    out.push_back('\n');
  }
  out.push_back('\n');
  char buf[32];
  for (int k = 0; k < align.w.rows; ++k) {
    for (int j = 0; j < align.w.cols; ++j) {
      if (j) out.push_back(' ');
      std::snprintf(buf, sizeof(buf), "%.6f", align.w.at(k, j));
      out += buf;
    }
    out.push_back('\n');
  }
  return out;
}

}  // namespace telemelody
