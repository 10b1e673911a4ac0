extern int ready(void);
int polls;

int main(void)
{
  polls = 0;
  while (!ready()) polls++;
  return 0;
}
