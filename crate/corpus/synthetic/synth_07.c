int g0, g1, g2, g3, g4, g5;
int arr[8] = {-6, -6, -4, 4, -8, 2, 6, -8};
int i0, i1;

int helper(int a, int b)
{
  return a * 2 - b;
}

void bump(int k)
{
  g0 = g0 + k % 5;
}

int main(void)
{
  g0 = 4;
  g1 = -1;
  g2 = 0;
  g3 = 0;
  g4 = -3;
  g5 = 3;
  if (arr[2]) g0 = g1;
  else g1++;
  switch (g5 % 3) {
  case 0: g3 = g2 - arr[1]; break;
  case 1: g1 = g3 + arr[3];
  default: g5 = g1;
  }
  switch (g4 % 3) {
  case 0: arr[7] = g1 & g4; break;
  case 1: g0 = -6 == g5;
  default: bump(g2 | g1);
  }
  for (i0 = 0; i0 < 2; i0++) {
    arr[i0] = arr[7] >= g1;
    g0 = i0 + 2;
  }
  switch (g3 % 3) {
  case 0: g2 = g0 >= arr[5]; break;
  case 1: g3++;
  default: g2 = -4 % 7;
  }
  i0 = 0;
  while (i0 < 4) {
    bump(helper(g4, i0));
    i0++;
  }
  g3++;
  g0 = g2 | g3;
  arr[1] = helper(-2, g5);
  if (g1 % 7) g5 = g1 >= arr[1];
  else g0 = g4;
  if (arr[4] & 2) arr[7] = g2 - g5;
  else g5 = g4 ^ g4;
  g5 = g4;
  for (i0 = 0; i0 < 2; i0++) bump(arr[5] % 7);
  switch (g3 % 3) {
  case 0: g1 = -3 >= arr[4]; break;
  case 1: arr[2] = helper(3, arr[3]);
  default: arr[6] = helper(g0, g5);
  }
  g2 = helper(arr[4], -8);
  g5 = helper(g1, arr[5]);
  for (i0 = 0; i0 < 8; i0++) {
    bump(helper(g4, arr[3]));
    g4 = -8 != g3;
    g4 = g4 < i0;
  }
  g2 = g2 * g5;
  for (i0 = 0; i0 < 6; i0++) g4++;
  for (i0 = 0; i0 < 3; i0++) arr[i0] = i0;
  for (i0 = 0; i0 < 4; i0++) {
    if (arr[i0] > g5) break;
    bump(arr[1] == g1);
    g2 = arr[1] - 7;
  }
  i0 = 0;
  while (i0 < 2) {
    g4 = g0 + -2;
    if (g5 > 40) break;
    i0++;
  }
  bump(arr[5] != arr[1]);
  switch (g1 % 3) {
  case 0: g5++; break;
  case 1: g5++;
  default: g4 = -7 ^ arr[3];
  }
  bump(helper(g1, g3));
  for (i0 = 0; i0 < 5; i0++) {
    if (arr[i0] > g1) continue;
    g2 = g4 % 7;
    g5 = g4;
  }
  arr[0] = helper(5, g4);
  i0 = 0;
  while (i0 < 4) {
    g0++;
    i0++;
  }
  switch (g0 % 3) {
  case 0: g5++; break;
  case 1: g0 = g4 - arr[6];
  default: g3 = arr[2] >= g2;
  }
  for (i0 = 0; i0 < 7; i0++) {
    bump(helper(5, 0));
    g5++;
  }
  switch (g2 % 3) {
  case 0: g4 = arr[7] * g2; break;
  case 1: g5++;
  default: g1 = helper(g2, arr[2]);
  }
  g0 = helper(7, -5);
  for (i0 = 0; i0 < 6; i0++) {
    if (arr[i0] > g1) break;
    arr[i0] = g5;
    g0 = i0;
  }
  i0 = 0;
  while (i0 < 4) {
    g0++;
    if (g1 > 40) break;
    i0++;
  }
  if (g3 >= arr[2]) g0 = -5 * arr[7];
  else g2++;
  for (i0 = 0; i0 < 1; i0++) g1 = g3;
  i0 = 0;
  while (i0 < 1) {
    g1 = g3 == g3;
    i0++;
  }
  if (g2 % 7) g2 = g2;
  else g3 = g2 == g5;
  switch (g4 % 3) {
  case 0: g0 = helper(g2, 2); break;
  case 1: g3++;
  default: bump(g3 | g4);
  }
  g1 = g3 * -4;
  for (i0 = 0; i0 < 5; i0++) {
    if (arr[i0] > g5) break;
    g4 = i0 % 7;
  }
  if (arr[2] % 7) g5 = g1 < g2;
  else g2 = g3;
  if (g1 + -9) bump(arr[4] % 7);
  else g0 = helper(g3, arr[7]);
  i0 = 0;
  while (i0 < 4) {
    g5 = i0 & i0;
    i0++;
  }
  switch (g5 % 3) {
  case 0: g0 = arr[7]; break;
  case 1: g5 = arr[3] + g3;
  default: g5 = g3 ^ g5;
  }
  if (g1 * g5) g2++;
  else arr[6] = 5 < g5;
  arr[2] = 8 | arr[3];
  for (i0 = 0; i0 < 8; i0++) g1 = i0 >= g1;
  arr[0] = arr[7] | g3;
  for (i0 = 0; i0 < 4; i0++) {
    if (arr[i0] > g2) continue;
    g1 = arr[4] % 7;
  }
  for (i0 = 0; i0 < 6; i0++) g1 = 6 != g2;
  g2 = g0;
  bump(6 - arr[3]);
  for (i0 = 0; i0 < 2; i0++) {
    if (arr[i0] > g2) break;
    g0++;
  }
  i0 = 0;
  while (i0 < 2) {
    if (arr[7] * g2) bump(g0 | -6);
    else g1 = 2 & -4;
    i0++;
  }
  g4 = arr[7];
  for (i0 = 0; i0 < 2; i0++) {
    g3 = g3;
    g1 = -8 != g0;
    g4 = g4 + i0;
  }
  switch (g4 % 3) {
  case 0: g1 = helper(-7, g1); break;
  case 1: g1 = -7;
  default: g3 = g3 - g0;
  }
  if (arr[4] * arr[6]) arr[2] = helper(-7, 6);
  else g0 = g5 * arr[4];
  switch (g4 % 3) {
  case 0: g1 = helper(-4, g1); break;
  case 1: g1 = g5 * -5;
  default: g0 = helper(-7, g2);
  }
  bump(-1);
  bump(g5 != g4);
  for (i0 = 0; i0 < 8; i0++) g0++;
  for (i0 = 0; i0 < 2; i0++) g5 = helper(g2, g5);
  for (i0 = 0; i0 < 6; i0++) {
    g1 = g0 + 4;
    arr[i0] = arr[1] * g3;
    g4 = arr[2] ^ g0;
  }
  switch (g1 % 3) {
  case 0: g0++; break;
  case 1: g1++;
  default: g5 = g5 >= g1;
  }
  i0 = 0;
  while (i0 < 2) {
    g0 = 7 ^ g0;
    i0++;
  }
  bump(helper(g5, -7));
  if (g5 % 7) g1 = -3 != -2;
  else arr[1] = g2 - g3;
  for (i0 = 0; i0 < 4; i0++) {
    if (arr[i0] > g4) continue;
    bump(g1 * g5);
    g2 = g2 - arr[2];
  }
  if (g3 - g2) arr[1] = g4 - g0;
  else g4 = -6 - -2;
  switch (g4 % 3) {
  case 0: arr[2] = -2 % 7; break;
  case 1: arr[0] = g2;
  default: g1 = arr[0] % 7;
  }
  switch (g0 % 3) {
  case 0: g1 = g0 == g1; break;
  case 1: g4 = g4 >= g0;
  default: bump(arr[3] ^ g0);
  }
  switch (g4 % 3) {
  case 0: g4 = g2 % 7; break;
  case 1: arr[7] = 5 != 8;
  default: g0 = arr[1] & g5;
  }
  for (i0 = 0; i0 < 8; i0++) {
    switch (g2 % 3) {
    case 0: g3 = g5 % 7; break;
    case 1: bump(arr[5] + arr[1]);
    default: g1 = -8;
    }
    g4 = g0 != arr[3];
    g2++;
  }
  if (g2 % 7) g3 = arr[0] % 7;
  else g3 = g1 % 7;
  for (i0 = 0; i0 < 4; i0++) {
    g1 = arr[5] - i0;
    switch (g2 % 3) {
    case 0: bump(g4 != 2); break;
    case 1: g0++;
    default: g4 = g1 & arr[4];
    }
    g5 = arr[3] >= arr[4];
  }
  for (i0 = 0; i0 < 3; i0++) {
    if (arr[i0] > g3) break;
    bump(0);
    g2 = arr[4] >= arr[0];
  }
  i0 = 0;
  while (i0 < 4) {
    g3 = g0 != g0;
    i0++;
  }
  for (i0 = 0; i0 < 8; i0++) g5 = arr[7] | arr[6];
  for (i0 = 0; i0 < 6; i0++) g5 = g0 % 7;
  if (helper(2, arr[5])) g0 = 3 * g0;
  else g1 = g1 >= g5;
  for (i0 = 0; i0 < 7; i0++) {
    if (arr[i0] > g5) continue;
    g0 = arr[0] % 7;
    bump(arr[7] % 7);
  }
  for (i0 = 0; i0 < 6; i0++) {
    g4 = g0 != g0;
    g2++;
    for (i1 = 0; i1 < 8; i1++) bump(arr[3] + i1);
  }
  for (i0 = 0; i0 < 1; i0++) {
    if (arr[i0] > g5) continue;
    g5 = g5 | arr[2];
    g3 = arr[4];
  }
  i0 = 0;
  while (i0 < 4) {
    for (i1 = 0; i1 < 6; i1++) {
      g4 = g0 != g4;
      g4 = g2 | -7;
      g5 = g3 & g3;
    }
    if (g0 > 40) break;
    i0++;
  }
  g2 = helper(-4, g1);
  g1 = g2 == arr[3];
  for (i0 = 0; i0 < 7; i0++) {
    if (arr[i0] > g2) break;
    g5 = helper(arr[1], g2);
  }
  for (i0 = 0; i0 < 2; i0++) {
    g0 = helper(g5, g2);
    g0 = helper(arr[6], arr[0]);
  }
  for (i0 = 0; i0 < 1; i0++) {
    g1 = helper(-1, g2);
    g2 = -5;
  }
  if (helper(g1, g0)) bump(arr[3] ^ 9);
  else arr[4] = 7;
  for (i0 = 0; i0 < 3; i0++) arr[i0] = g0 & g4;
  i0 = 0;
  while (i0 < 4) {
    arr[i0] = g0 | g5;
    i0++;
  }
  for (i0 = 0; i0 < 6; i0++) arr[i0] = g0 % 7;
  switch (g1 % 3) {
  case 0: g5 = arr[2] % 7; break;
  case 1: g0 = helper(-6, arr[6]);
  default: g0++;
  }
  if (g2 % 7) g0 = 6 >= arr[4];
  else g5 = g3 - g5;
  if (5 % 7) arr[4] = helper(3, arr[4]);
  else g5 = g3 - g3;
  if (g1 % 7) g4 = g1 % 7;
  else g0 = -7;
  switch (g5 % 3) {
  case 0: arr[0] = g1 < g1; break;
  case 1: bump(helper(-7, arr[5]));
  default: arr[4] = g5 * g5;
  }
  arr[1] = 5 % 7;
  if (g1 != arr[7]) g1 = g3 - g2;
  else g1 = g2;
  if (g0) g2 = g0 ^ -3;
  else g0 = g4 + g4;
  if (7 % 7) g1 = arr[3] == arr[7];
  else bump(g5 % 7);
  if (g3 != g2) g2 = g0 == arr[4];
  else g5 = arr[4] % 7;
  g3 = 6;
  g5 = g5 == g2;
  for (i0 = 0; i0 < 2; i0++) {
    if (arr[i0] > g0) break;
    bump(arr[7] != -1);
    g4 = g5 + arr[5];
  }
  g0 = arr[0] | g1;
  switch (g2 % 3) {
  case 0: g4 = arr[0] & arr[5]; break;
  case 1: bump(g3);
  default: g5 = arr[4] - 8;
  }
  switch (g5 % 3) {
  case 0: g5 = g0 % 7; break;
  case 1: g4 = g5 + g5;
  default: g1 = arr[0] % 7;
  }
  g0 = g2 | g5;
  g2 = 7 & g0;
  for (i0 = 0; i0 < 5; i0++) {
    arr[7] = arr[6] ^ g4;
    g2++;
  }
  switch (g3 % 3) {
  case 0: g1 = g5; break;
  case 1: g4 = g5 * g3;
  default: g2 = helper(g2, 6);
  }
  for (i0 = 0; i0 < 6; i0++) {
    g1 = g3 != arr[5];
    bump(helper(g2, g3));
  }
  for (i0 = 0; i0 < 7; i0++) g5++;
  bump(arr[0] - g2);
  for (i0 = 0; i0 < 4; i0++) g2 = arr[7];
  if (g1 - g0) arr[1] = g5 != -3;
  else bump(g4);
  i0 = 0;
  while (i0 < 4) {
    g3 = g1 ^ arr[6];
    i0++;
  }
  if (arr[7] | g4) g5 = helper(g3, arr[4]);
  else g4 = g2 == g2;
  if (g1 >= g2) arr[6] = helper(arr[6], 2);
  else g3 = helper(g2, g3);
  switch (g1 % 3) {
  case 0: g4 = g3 % 7; break;
  case 1: g0 = 6;
  default: g2 = g0 * g3;
  }
  g4 = arr[4] - g0;
  switch (g0 % 3) {
  case 0: g2 = helper(g5, g2); break;
  case 1: arr[6] = 6 % 7;
  default: g2 = g2 % 7;
  }
  for (i0 = 0; i0 < 4; i0++) {
    bump(g4 | g5);
    g2++;
  }
  g1 = arr[3] ^ g5;
  g3 = g3 != g3;
  if (arr[1]) bump(helper(g1, g4));
  else g5 = helper(g0, g2);
  switch (g0 % 3) {
  case 0: bump(g0); break;
  case 1: g3++;
  default: g2 = helper(g1, g0);
  }
  arr[0] = helper(g2, -5);
  for (i0 = 0; i0 < 2; i0++) g5 = i0 - g4;
  switch (g0 % 3) {
  case 0: g1++; break;
  case 1: g4 = g4 - g3;
  default: g4 = -7;
  }
  i0 = 0;
  while (i0 < 2) {
    g0 = arr[1] + g1;
    i0++;
  }
  if (g5 % 7) g1 = g0 - g5;
  else g0 = arr[2] + 8;
  g1 = -4 + g3;
  for (i0 = 0; i0 < 7; i0++) g3 = i0;
  switch (g1 % 3) {
  case 0: g0 = helper(g0, g0); break;
  case 1: bump(helper(7, g2));
  default: g2 = 5 % 7;
  }
  g3 = -3 != g0;
  arr[1] = 8 < g2;
  for (i0 = 0; i0 < 2; i0++) {
    if (arr[i0] > g5) break;
    arr[i0] = g1;
  }
  for (i0 = 0; i0 < 1; i0++) bump(helper(g0, g0));
  g2++;
  switch (g5 % 3) {
  case 0: g4 = g3 | arr[3]; break;
  case 1: arr[5] = -3 ^ g0;
  default: g4 = g3 * -3;
  }
  if (9 < arr[2]) arr[5] = g4 & g2;
  else arr[7] = arr[2] % 7;
  if (g2 - g5) g3 = helper(-5, arr[2]);
  else g1 = g3 < g0;
  g5++;
  switch (g5 % 3) {
  case 0: g5 = helper(9, g0); break;
  case 1: g1 = helper(g3, g1);
  default: g2 = g4 == g4;
  }
  i0 = 0;
  while (i0 < 1) {
    bump(2 < g5);
    if (g2 > 40) break;
    i0++;
  }
  for (i0 = 0; i0 < 1; i0++) {
    if (arr[i0] > g2) continue;
    g0 = g1 < arr[1];
  }
  switch (g4 % 3) {
  case 0: bump(g3); break;
  case 1: g1 = helper(-7, g2);
  default: arr[3] = helper(g3, g1);
  }
  switch (g0 % 3) {
  case 0: arr[0] = arr[4] == 8; break;
  case 1: g0 = g5;
  default: g4 = g4 >= g0;
  }
  return g0 % 100;
}
