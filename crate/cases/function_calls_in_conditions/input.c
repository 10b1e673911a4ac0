int hits, i;

int is_even(int v)
{
  return v % 2 == 0;
}

int main(void)
{
  hits = 0;
  for (i = 0; i < 9; i++) {
    if (is_even(i) && i > 2) hits++;
  }
  return hits;
}
