"""The 17x17 right block of a [34,17,8] rate one-half benchmark code.

The code spanned by (I | A) is optimal as a rate one-half code, has a
singular right block (rank 16), and is CIS with the partition
L = {13..29} (0-based).
"""

RECORD_34_RIGHT_BLOCK = [
    "11110100111101101",
    "11001011111101101",
    "10101000001101101",
    "01101000110001101",
    "11111010101011100",
    "11111111111110111",
    "10001100110101001",
    "10011110101101111",
    "01010100010011001",
    "01000110110111111",
    "00101101111101111",
    "00111100101001001",
    "00000101011011110",
    "00001001010111101",
    "00001111001101000",
    "00010100111101010",
    "00011011111111110",
]
