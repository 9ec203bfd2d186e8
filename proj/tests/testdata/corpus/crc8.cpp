#include <ap_int.h>

// CRC-8 (polynomial 0x07) over one input byte.
void top_module(ap_uint<8> data, ap_uint<8>& crc) {
  ap_uint<8> remainder = data;
  for (int bit = 0; bit < 8; bit++) {
#pragma HLS UNROLL
    if (remainder & 0x80) {
      remainder = (remainder << 1) ^ 0x07;
    } else {
      remainder = remainder << 1;
    }
  }
  crc = remainder;
}
